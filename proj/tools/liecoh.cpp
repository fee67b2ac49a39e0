// liecoh: exact workbench for Lie algebra cohomology, homogeneous-quotient
// theorem dispatch, and torus-foliation averaging.
//
// Exit codes: 0 = computed/ok, 1 = input or computation error (structured
// JSON on stdout), 2 = principled refusal by the gh dispatcher. Timing goes
// to stderr so stdout stays byte-deterministic.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "liecoh/catalog.hpp"
#include "liecoh/io.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using liecoh::io::Json;

struct Inputs {
    std::string catalog_name;
    std::string file;
    std::string subalgebra_arg;
    std::string format = "table";
    bool assume_compact_quotient = false;
    bool assume_dense = false;
    bool representatives = false;
    int degree = -1;
    long long imax = 4;
    long long mode_box = 3;
};

struct Outcome {
    Json payload;
    int exit_code = 0;
    std::function<void(std::ostream&)> table; // human rendering of the payload
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw liecoh::InputError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct LoadedAlgebra {
    liecoh::LieAlgebra algebra;
    std::optional<liecoh::Matrix> marked;
    std::string advisory;
    std::string digest_src;
};

liecoh::Matrix parse_subalgebra_rows(const std::string& text, size_t n) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw liecoh::ParseError("malformed JSON in --subalgebra");
    if (j.is_object() && j.contains("subalgebra")) j = j["subalgebra"];
    if (!j.is_array() || j.empty())
        throw liecoh::ParseError("--subalgebra must give a nonempty array of rows");
    liecoh::Matrix m(j.size(), n);
    for (size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != n)
            throw liecoh::ParseError("subalgebra row " + std::to_string(r + 1) +
                                     " must have " + std::to_string(n) + " entries");
        for (size_t c = 0; c < n; ++c) {
            if (!j[r][c].is_string())
                throw liecoh::ParseError("subalgebra entries must be scalar strings");
            m.at(r, c) = liecoh::Scalar::parse(j[r][c].get<std::string>());
        }
    }
    return m;
}

LoadedAlgebra load_algebra(const Inputs& in) {
    const bool have_cat = !in.catalog_name.empty();
    const bool have_file = !in.file.empty();
    if (have_cat == have_file)
        throw liecoh::InputError("exactly one of --catalog or --file is required");

    std::optional<LoadedAlgebra> out;
    if (have_cat) {
        auto entry = liecoh::catalog(in.catalog_name);
        std::string canon = liecoh::io::print_algebra(entry.algebra, entry.subalgebra).dump(2);
        out = LoadedAlgebra{std::move(entry.algebra), std::move(entry.subalgebra),
                            entry.advisory, std::move(canon)};
    } else {
        std::string text = read_file(in.file);
        auto parsed = liecoh::io::parse_algebra_text(text);
        out = LoadedAlgebra{std::move(parsed.algebra), std::move(parsed.subalgebra), "",
                            std::move(text)};
    }

    if (!in.subalgebra_arg.empty()) {
        const bool inline_json = !in.subalgebra_arg.empty() && in.subalgebra_arg[0] == '[';
        std::string text = inline_json ? in.subalgebra_arg : read_file(in.subalgebra_arg);
        liecoh::Matrix rows = parse_subalgebra_rows(text, out->algebra.dim());
        liecoh::Subspace h = liecoh::Subspace::from_rows(out->algebra.dim(), rows);
        if (!liecoh::is_subalgebra(out->algebra, h))
            throw liecoh::NotASubalgebra("--subalgebra rows are not closed under the bracket");
        out->marked = std::move(rows);
        out->advisory.clear(); // catalog advisories describe the marked pair only
        out->digest_src += "\n--subalgebra\n" + text;
    }
    return std::move(*out);
}

liecoh::Subspace require_subalgebra(const LoadedAlgebra& la, const char* verb) {
    if (!la.marked)
        throw liecoh::InputError(std::string(verb) +
                                 " needs a subalgebra: mark one with --subalgebra or use a "
                                 "catalog entry that carries one");
    return liecoh::Subspace::from_rows(la.algebra.dim(), *la.marked);
}

// ---------------------------------------------------------------- rendering

void print_kv(std::ostream& os, const std::string& key, const std::string& val) {
    os << std::left << std::setw(14) << key << val << "\n";
}

std::string betti_row(const std::vector<size_t>& b) {
    std::string out;
    for (size_t k = 0; k < b.size(); ++k) {
        if (k) out += "  ";
        out += "b" + std::to_string(k) + "=" + std::to_string(b[k]);
    }
    return out;
}

std::string int_list(const std::vector<size_t>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

void print_representatives(std::ostream& os, const liecoh::BettiTable& t, int only_degree) {
    for (size_t k = 0; k < t.representatives.size(); ++k) {
        if (only_degree >= 0 && k != static_cast<size_t>(only_degree)) continue;
        if (t.representatives[k].empty()) continue;
        os << "representatives (degree " << k << "):\n";
        for (const auto& rep : t.representatives[k]) {
            os << "  [";
            for (size_t i = 0; i < rep.size(); ++i) {
                if (i) os << ", ";
                os << rep[i].str();
            }
            os << "]\n";
        }
    }
}

Json betti_payload(const std::string& algebra, const liecoh::BettiTable& t,
                   const Inputs& in) {
    if (in.degree < 0) return liecoh::io::betti_json(algebra, t, in.representatives);
    if (static_cast<size_t>(in.degree) >= t.betti.size())
        throw liecoh::InputError("--degree " + std::to_string(in.degree) +
                                 " exceeds the top degree " +
                                 std::to_string(t.betti.size() - 1));
    Json j;
    j["algebra"] = algebra;
    j["route"] = t.route;
    j["degree"] = in.degree;
    j["betti"] = Json::array({t.betti[in.degree]});
    if (in.representatives) {
        Json list = Json::array();
        for (const auto& vec : t.representatives[in.degree]) {
            Json row = Json::array();
            for (const auto& s : vec) row.push_back(s.str());
            list.push_back(std::move(row));
        }
        j["representatives"] = Json{{std::to_string(in.degree), std::move(list)}};
    }
    return j;
}

Outcome betti_outcome(const std::string& algebra, liecoh::BettiTable t, const Inputs& in) {
    Outcome o;
    o.payload = betti_payload(algebra, t, in);
    o.table = [algebra, t = std::move(t), in](std::ostream& os) {
        print_kv(os, "algebra", algebra);
        print_kv(os, "route", t.route);
        if (in.degree >= 0) {
            print_kv(os, "degree", std::to_string(in.degree));
            print_kv(os, "betti",
                     "b" + std::to_string(in.degree) + "=" +
                         std::to_string(t.betti[in.degree]));
        } else {
            print_kv(os, "betti", betti_row(t.betti));
            print_kv(os, "euler", std::to_string(t.euler()));
        }
        if (in.representatives) print_representatives(os, t, in.degree);
    };
    return o;
}

// ------------------------------------------------------------------- verbs

Outcome run_check(const Inputs& in) {
    auto la = load_algebra(in);
    const auto& L = la.algebra;

    Json j;
    j["algebra"] = L.name();
    j["dim"] = L.dim();
    j["jacobi"] = jacobi_check(L) ? "failed" : "ok"; // parse already rejects failures
    auto st = structure(L);
    Json sj;
    sj["center_dim"] = st.center.dim();
    sj["derived_dim"] = st.derived.dim();
    sj["unimodular"] = st.unimodular;
    j["structure"] = std::move(sj);
    std::string ct;
    try {
        auto cert = liecoh::compact_type(L);
        ct = cert.yes ? "yes"
             : cert.obstruction ==
                     liecoh::CompactTypeObstruction::CenterDerivedNotComplementary
                 ? "no: center and derived subalgebra are not complementary"
                 : "no: Killing form is not negative definite on the derived subalgebra";
    } catch (const liecoh::UnorderedScalar&) {
        ct = "undecidable: structure constants involve t, and Q(t) carries no order";
    }
    j["compact_type"] = ct;
    if (la.marked) {
        liecoh::Subspace h = liecoh::Subspace::from_rows(L.dim(), *la.marked);
        Json hj;
        hj["dim"] = h.dim();
        hj["is_subalgebra"] = true; // enforced at load time
        hj["is_ideal"] = liecoh::is_ideal(L, h);
        j["subalgebra"] = std::move(hj);
    }

    Outcome o;
    o.payload = j;
    o.table = [j](std::ostream& os) {
        print_kv(os, "algebra", j["algebra"].get<std::string>());
        print_kv(os, "dim", std::to_string(j["dim"].get<size_t>()));
        print_kv(os, "jacobi", j["jacobi"].get<std::string>());
        print_kv(os, "center", std::to_string(j["structure"]["center_dim"].get<size_t>()));
        print_kv(os, "derived", std::to_string(j["structure"]["derived_dim"].get<size_t>()));
        print_kv(os, "unimodular", j["structure"]["unimodular"].get<bool>() ? "yes" : "no");
        print_kv(os, "compact-type", j["compact_type"].get<std::string>());
        if (j.contains("subalgebra")) {
            print_kv(os, "h-dim", std::to_string(j["subalgebra"]["dim"].get<size_t>()));
            print_kv(os, "h-ideal", j["subalgebra"]["is_ideal"].get<bool>() ? "yes" : "no");
        }
    };
    return o;
}

Outcome run_betti(const Inputs& in) {
    auto la = load_algebra(in);
    return betti_outcome(la.algebra.name(), liecoh::betti(liecoh::full_complex(la.algebra)),
                         in);
}

Outcome run_relative(const Inputs& in) {
    auto la = load_algebra(in);
    auto h = require_subalgebra(la, "relative");
    return betti_outcome(la.algebra.name(),
                         liecoh::betti(liecoh::relative_complex(la.algebra, h)), in);
}

Outcome run_invariant(const Inputs& in) {
    auto la = load_algebra(in);
    return betti_outcome(la.algebra.name(),
                         liecoh::betti(liecoh::invariant_complex(la.algebra)), in);
}

Outcome run_quotient(const Inputs& in) {
    auto la = load_algebra(in);
    auto h = require_subalgebra(la, "quotient");
    auto q = liecoh::quotient(la.algebra, h, la.algebra.name() + "/h");
    auto t = liecoh::betti(liecoh::full_complex(q.algebra));
    t.route = "quotient";
    return betti_outcome(la.algebra.name(), std::move(t), in);
}

Outcome run_gh(const Inputs& in) {
    auto la = load_algebra(in);
    auto h = require_subalgebra(la, "gh");
    liecoh::Assumptions a;
    a.compact_quotient = in.assume_compact_quotient;
    a.dense = in.assume_dense;
    auto rep = liecoh::gh_cohomology(la.algebra, h, a, la.advisory);

    Outcome o;
    o.payload = liecoh::io::gh_json(rep, in.representatives);
    o.exit_code = rep.computed ? 0 : 2;
    o.table = [rep, in](std::ostream& os) {
        print_kv(os, "verdict", rep.verdict());
        print_kv(os, "theorem", to_string(rep.theorem));
        os << "audit\n";
        for (const auto& a : rep.audit) {
            os << "  " << a.hypothesis << ": ";
            if (a.status == liecoh::HypothesisStatus::Failed && !a.note.empty())
                os << a.note;
            else {
                os << to_string(a.status);
                if (!a.note.empty()) os << " (" << a.note << ")";
            }
            os << "\n";
        }
        if (rep.betti_table) {
            print_kv(os, "betti", betti_row(rep.betti_table->betti));
            if (in.representatives) print_representatives(os, *rep.betti_table, -1);
        }
        if (!rep.cross_checks.empty()) {
            os << "cross-checks\n";
            for (const auto& c : rep.cross_checks)
                os << "  " << c.description << ": " << (c.equal ? "agree " : "DISAGREE ")
                   << int_list(c.left) << " vs " << int_list(c.right) << "\n";
        }
        if (!rep.refusal_reason.empty()) print_kv(os, "refusal", rep.refusal_reason);
        if (!rep.advisory.empty()) print_kv(os, "advisory", rep.advisory);
    };
    return o;
}

Outcome run_e1(const Inputs& in) {
    auto la = load_algebra(in);
    const auto& L = la.algebra;
    if (in.imax < 0 || in.imax > 16)
        throw liecoh::InputError("--imax must lie in 0..16");

    std::vector<size_t> basic;
    std::string basic_route;
    if (la.marked) {
        liecoh::Subspace h = liecoh::Subspace::from_rows(L.dim(), *la.marked);
        auto q = liecoh::quotient(L, h, L.name() + "/h"); // throws unless h is an ideal
        basic = liecoh::betti(liecoh::full_complex(q.algebra), false).betti;
        basic_route = "quotient";
    } else {
        basic = liecoh::betti(liecoh::full_complex(L), false).betti;
        basic_route = "full";
    }
    auto table = liecoh::e1_table(L, basic, static_cast<size_t>(in.imax));
    std::vector<size_t> s(in.imax + 1);
    for (long long i = 0; i <= in.imax; ++i)
        s[i] = liecoh::invariant_polynomials_dim(L, static_cast<size_t>(i));

    Json j;
    j["algebra"] = L.name();
    j["imax"] = in.imax;
    j["basic_route"] = basic_route;
    j["basic_betti"] = basic;
    j["invariant_poly_dims"] = s;
    j["table"] = table;

    Outcome o;
    o.payload = j;
    o.table = [name = L.name(), table, s, basic](std::ostream& os) {
        print_kv(os, "algebra", name);
        print_kv(os, "basic", betti_row(basic));
        print_kv(os, "s_i", int_list(s));
        os << "E1 page (rows i = polynomial degree, columns j = total degree)\n";
        os << "     ";
        for (size_t jcol = 0; jcol < table[0].size(); ++jcol)
            os << std::right << std::setw(5) << ("j=" + std::to_string(jcol));
        os << "\n";
        for (size_t i = 0; i < table.size(); ++i) {
            os << "i=" << std::left << std::setw(3) << i;
            for (size_t jcol = 0; jcol < table[i].size(); ++jcol)
                os << std::right << std::setw(5) << table[i][jcol];
            os << "\n";
        }
    };
    return o;
}

Outcome run_torus(const Inputs& in) {
    if (in.file.empty() || !in.catalog_name.empty())
        throw liecoh::InputError("torus reads a foliation file via --file");
    std::string text = read_file(in.file);
    Json fol = Json::parse(text, nullptr, false);
    if (fol.is_discarded()) throw liecoh::ParseError("malformed JSON");
    auto [n, gens] = liecoh::io::parse_foliation(fol);
    auto F = liecoh::torus::build_foliation(n, gens);
    auto cert = liecoh::torus::verify_acyclicity(F, in.mode_box);
    auto t = liecoh::torus::basic_cohomology(F, in.mode_box);

    Json j;
    j["n"] = F.n;
    j["h_dim"] = F.h.dim();
    j["closure_dim"] = F.closure.dim();
    j["k0_dim"] = F.K0.dim();
    j["route"] = t.route;
    j["betti"] = t.betti;
    j["euler"] = t.euler();
    Json cj;
    cj["mode_box"] = in.mode_box;
    cj["modes_checked"] = cert.modes_checked;
    cj["identity_ok"] = cert.identity_ok;
    cj["exactness_ok"] = cert.exactness_ok;
    j["certificates"] = std::move(cj);
    if (in.representatives) {
        Json reps = Json::object();
        for (size_t k = 0; k < t.representatives.size(); ++k) {
            if (t.representatives[k].empty()) continue;
            Json list = Json::array();
            for (const auto& vec : t.representatives[k]) {
                Json row = Json::array();
                for (const auto& sc : vec) row.push_back(sc.str());
                list.push_back(std::move(row));
            }
            reps[std::to_string(k)] = std::move(list);
        }
        j["representatives"] = std::move(reps);
    }

    Outcome o;
    o.payload = j;
    o.table = [j, t, in](std::ostream& os) {
        print_kv(os, "torus", "T^" + std::to_string(j["n"].get<size_t>()));
        print_kv(os, "h-dim", std::to_string(j["h_dim"].get<size_t>()));
        print_kv(os, "closure", std::to_string(j["closure_dim"].get<size_t>()));
        print_kv(os, "K0-dim", std::to_string(j["k0_dim"].get<size_t>()));
        print_kv(os, "betti", betti_row(t.betti));
        print_kv(os, "euler", std::to_string(t.euler()));
        const auto& c = j["certificates"];
        os << "certificates (|k|_inf <= " << c["mode_box"].get<long long>()
           << "): " << c["modes_checked"].get<size_t>() << " nonzero basic modes, identity "
           << (c["identity_ok"].get<bool>() ? "ok" : "FAILED") << ", exactness "
           << (c["exactness_ok"].get<bool>() ? "ok" : "FAILED") << "\n";
        if (in.representatives) print_representatives(os, t, -1);
    };
    return o;
}

Outcome run_catalog(const Inputs&) {
    auto names = liecoh::catalog_names();
    std::sort(names.begin(), names.end());
    Json list = Json::array();
    struct Row {
        std::string name, desc;
        size_t dim;
        bool marked;
    };
    std::vector<Row> rows;
    for (const auto& name : names) {
        auto entry = liecoh::catalog(name);
        Json e;
        e["name"] = name;
        e["dim"] = entry.algebra.dim();
        e["marked_subalgebra"] = entry.subalgebra.has_value();
        e["description"] = entry.description;
        list.push_back(std::move(e));
        rows.push_back({name, entry.description, entry.algebra.dim(),
                        entry.subalgebra.has_value()});
    }

    Outcome o;
    o.payload = std::move(list);
    o.table = [rows](std::ostream& os) {
        os << std::left << std::setw(14) << "name" << std::setw(5) << "dim" << std::setw(10)
           << "marked-h" << "description\n";
        for (const auto& r : rows)
            os << std::left << std::setw(14) << r.name << std::setw(5) << r.dim
               << std::setw(10) << (r.marked ? "yes" : "no") << r.desc << "\n";
    };
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"liecoh: exact Lie algebra cohomology and foliation averaging workbench"};
    app.require_subcommand(1);

    Inputs in;
    std::map<std::string, std::function<Outcome(const Inputs&)>> handlers;

    auto add_common = [&](CLI::App* cmd, bool with_subalgebra, bool with_degree) {
        cmd->add_option("--catalog", in.catalog_name, "catalog entry name");
        cmd->add_option("--file", in.file, "algebra file (JSON)");
        if (with_subalgebra)
            cmd->add_option("--subalgebra", in.subalgebra_arg,
                            "subalgebra rows: inline JSON array or a file path");
        if (with_degree)
            cmd->add_option("--degree", in.degree, "restrict the report to one degree");
        cmd->add_flag("--representatives", in.representatives,
                      "include canonical representative cocycles");
        cmd->add_option("--format", in.format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
    };

    auto* c_check = app.add_subcommand("check", "validate an algebra and audit its structure");
    add_common(c_check, true, false);
    handlers["check"] = run_check;

    auto* c_betti = app.add_subcommand("betti", "cohomology of the full complex");
    add_common(c_betti, true, true);
    handlers["betti"] = run_betti;

    auto* c_rel = app.add_subcommand("relative", "cohomology of the relative complex");
    add_common(c_rel, true, true);
    handlers["relative"] = run_relative;

    auto* c_inv = app.add_subcommand("invariant", "cohomology of the invariant complex");
    add_common(c_inv, true, true);
    handlers["invariant"] = run_invariant;

    auto* c_quot = app.add_subcommand("quotient", "cohomology of the quotient by an ideal");
    add_common(c_quot, true, true);
    handlers["quotient"] = run_quotient;

    auto* c_gh = app.add_subcommand(
        "gh", "de Rham cohomology of G/H by theorem dispatch with hypothesis audit");
    add_common(c_gh, true, false);
    c_gh->add_flag("--assume-compact-quotient", in.assume_compact_quotient,
                   "assert that G/closure(H) is compact");
    c_gh->add_flag("--assume-dense", in.assume_dense, "assert that H is dense in G");
    handlers["gh"] = run_gh;

    auto* c_e1 = app.add_subcommand("e1", "E1-page dimension table");
    add_common(c_e1, true, false);
    c_e1->add_option("--imax", in.imax, "largest polynomial degree");
    handlers["e1"] = run_e1;

    auto* c_torus =
        app.add_subcommand("torus", "basic cohomology and averaging certificates on T^n");
    c_torus->add_option("--file", in.file, "foliation file (JSON)");
    c_torus->add_option("--mode-box", in.mode_box, "sup-norm bound for certified modes");
    c_torus->add_flag("--representatives", in.representatives,
                      "include representative constant forms");
    c_torus->add_option("--format", in.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    handlers["torus"] = run_torus;

    auto* c_cat = app.add_subcommand("catalog", "list built-in algebras");
    c_cat->add_option("--format", in.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    handlers["catalog"] = run_catalog;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cout << liecoh::io::error_json("usage", e.what()).dump(2) << "\n";
        app.exit(e); // usage text to stderr
        return 1;
    }

    std::string command = "liecoh";
    for (int i = 1; i < argc; ++i) command += std::string(" ") + argv[i];

    const auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    Json payload;
    std::function<void(std::ostream&)> table;
    std::string input_digest;
    try {
        const std::string verb = app.get_subcommands().front()->get_name();
        // digest what the computation actually consumed
        Outcome o = handlers.at(verb)(in);
        if (!in.file.empty())
            input_digest = liecoh::io::digest(read_file(in.file) +
                                              (in.subalgebra_arg.empty()
                                                   ? ""
                                                   : "\n--subalgebra\n" + in.subalgebra_arg));
        else if (!in.catalog_name.empty())
            input_digest = liecoh::io::digest(
                in.catalog_name + (in.subalgebra_arg.empty()
                                       ? ""
                                       : "\n--subalgebra\n" + in.subalgebra_arg));
        else
            input_digest = liecoh::io::digest(verb);
        payload = std::move(o.payload);
        table = std::move(o.table);
        code = o.exit_code;
    } catch (const liecoh::Error& e) {
        payload = liecoh::io::error_json(e.code(), e.what());
        input_digest = liecoh::io::digest(payload.dump());
        code = 1;
    } catch (const std::exception& e) {
        payload = liecoh::io::error_json("internal", e.what());
        input_digest = liecoh::io::digest(payload.dump());
        code = 1;
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::cerr << "elapsed_ms=" << std::fixed << std::setprecision(3) << ms << "\n";

    if (in.format == "json" || !table) {
        Json report;
        report["command"] = command;
        report["version"] = kVersion;
        report["input_digest"] = input_digest;
        report["payload"] = std::move(payload);
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "liecoh " << kVersion << "  (input digest " << input_digest << ")\n";
        table(std::cout);
    }
    return code;
}
