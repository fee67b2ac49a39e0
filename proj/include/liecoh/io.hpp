#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gh.hpp"
#include "lie_algebra.hpp"
#include "torus.hpp"

namespace liecoh::io {

/// ordered_json keeps keys in emission order, which together with canonical
/// Scalar printing makes every report byte-stable across runs
using Json = nlohmann::ordered_json;

inline constexpr size_t kMaxDim = 24;

/// FNV-1a 64-bit digest of the canonical input bytes, as fixed-width hex.
inline std::string digest(std::string_view bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

namespace detail {

inline Scalar parse_scalar_field(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw ParseError("expected a scalar string at " + where);
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

inline long long int_field(const Json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError("expected an integer at " + where);
    return j.get<long long>();
}

} // namespace detail

struct ParsedAlgebra {
    LieAlgebra algebra;
    std::optional<Matrix> subalgebra; // rows spanning h, as written in the file
};

/// Algebra files store only the upper triangle i < j (1-based); anything else
/// is an antisymmetry-storage violation and is rejected rather than folded.
/// The Jacobi identity is checked at parse time; a violation is a parse-stage
/// error naming the offending 1-based triple.
inline ParsedAlgebra parse_algebra(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    if (!j.contains("name") || !j["name"].is_string())
        throw ParseError("algebra file needs a string \"name\"");
    if (!j.contains("dim")) throw ParseError("algebra file needs an integer \"dim\"");
    const long long dim = detail::int_field(j["dim"], "\"dim\"");
    if (dim < 0) throw ParseError("\"dim\" must be nonnegative");
    if (static_cast<size_t>(dim) > kMaxDim)
        throw SizeCapExceeded("\"dim\" exceeds the supported maximum of " +
                              std::to_string(kMaxDim));
    const size_t n = static_cast<size_t>(dim);

    std::vector<BracketEntry> entries;
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) throw ParseError("\"brackets\" must be an array");
        for (const auto& b : j["brackets"]) {
            if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
                throw ParseError("each bracket needs \"i\", \"j\" and \"coeffs\"");
            const long long i1 = detail::int_field(b["i"], "bracket \"i\"");
            const long long j1 = detail::int_field(b["j"], "bracket \"j\"");
            if (i1 < 1 || j1 < 1 || i1 > dim || j1 > dim)
                throw ParseError("bracket indices must lie in 1.." + std::to_string(dim));
            if (i1 >= j1)
                throw ParseError(
                    "antisymmetry storage violation: brackets must be stored with i < j "
                    "(got i=" + std::to_string(i1) + ", j=" + std::to_string(j1) + ")");
            if (!b["coeffs"].is_object())
                throw ParseError("bracket \"coeffs\" must be an object");
            for (const auto& [key, val] : b["coeffs"].items()) {
                long long k1 = 0;
                try {
                    size_t used = 0;
                    k1 = std::stoll(key, &used);
                    if (used != key.size()) throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    throw ParseError("coefficient key '" + key +
                                     "' is not a 1-based basis index");
                }
                if (k1 < 1 || k1 > dim)
                    throw ParseError("coefficient index " + key + " out of range 1.." +
                                     std::to_string(dim));
                Scalar c = detail::parse_scalar_field(
                    val, "bracket [" + std::to_string(i1) + "," + std::to_string(j1) +
                             "] coefficient " + key);
                if (c.is_zero()) continue;
                entries.push_back({static_cast<size_t>(i1 - 1), static_cast<size_t>(j1 - 1),
                                   static_cast<size_t>(k1 - 1), c});
            }
        }
    }

    LieAlgebra L(j["name"].get<std::string>(), n, entries);
    if (auto bad = jacobi_check(L)) {
        throw ParseError("Jacobi identity fails on the basis triple (" +
                         std::to_string(bad->i + 1) + "," + std::to_string(bad->j + 1) + "," +
                         std::to_string(bad->k + 1) + ")");
    }

    ParsedAlgebra out{std::move(L), std::nullopt};
    if (j.contains("subalgebra")) {
        const auto& rows = j["subalgebra"];
        if (!rows.is_array() || rows.empty())
            throw ParseError("\"subalgebra\" must be a nonempty array of rows");
        Matrix m(rows.size(), n);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r].is_array() || rows[r].size() != n)
                throw ParseError("subalgebra row " + std::to_string(r + 1) + " must have " +
                                 std::to_string(n) + " entries");
            for (size_t c = 0; c < n; ++c)
                m.at(r, c) = detail::parse_scalar_field(
                    rows[r][c], "subalgebra row " + std::to_string(r + 1));
        }
        Subspace h = Subspace::from_rows(n, m);
        if (!is_subalgebra(out.algebra, h))
            throw NotASubalgebra(
                "the subalgebra rows are not closed under the bracket; fix the file rather "
                "than expecting them to be completed");
        out.subalgebra = std::move(m);
    }
    return out;
}

inline ParsedAlgebra parse_algebra_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return parse_algebra(j);
}

/// Canonical emitter: brackets sorted by (i, j), coefficient keys ascending,
/// zero entries omitted. parse(print(x)) reproduces x and re-printing gives
/// identical bytes.
inline Json print_algebra(const LieAlgebra& L, const std::optional<Matrix>& sub = std::nullopt) {
    Json j;
    j["name"] = L.name();
    j["dim"] = L.dim();
    Json brackets = Json::array();
    for (size_t i = 0; i < L.dim(); ++i) {
        for (size_t jj = i + 1; jj < L.dim(); ++jj) {
            Json coeffs = Json::object();
            for (size_t k = 0; k < L.dim(); ++k) {
                const Scalar& c = L.c(i, jj, k);
                if (!c.is_zero()) coeffs[std::to_string(k + 1)] = c.str();
            }
            if (!coeffs.empty()) {
                Json b;
                b["i"] = i + 1;
                b["j"] = jj + 1;
                b["coeffs"] = std::move(coeffs);
                brackets.push_back(std::move(b));
            }
        }
    }
    j["brackets"] = std::move(brackets);
    if (sub) {
        Json rows = Json::array();
        for (size_t r = 0; r < sub->rows(); ++r) {
            Json row = Json::array();
            for (size_t c = 0; c < sub->cols(); ++c) row.push_back(sub->at(r, c).str());
            rows.push_back(std::move(row));
        }
        j["subalgebra"] = std::move(rows);
    }
    return j;
}

/// Foliation file: { "n": int, "generators": [[ScalarText x n], ...] }.
inline std::pair<size_t, Matrix> parse_foliation(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
        throw ParseError("foliation file needs \"n\" and \"generators\"");
    const long long n = detail::int_field(j["n"], "\"n\"");
    if (n < 1 || static_cast<size_t>(n) > kMaxDim)
        throw ParseError("\"n\" must lie in 1.." + std::to_string(kMaxDim));
    const auto& g = j["generators"];
    if (!g.is_array() || g.empty())
        throw ParseError("\"generators\" must be a nonempty array of rows");
    Matrix m(g.size(), static_cast<size_t>(n));
    for (size_t r = 0; r < g.size(); ++r) {
        if (!g[r].is_array() || g[r].size() != static_cast<size_t>(n))
            throw ParseError("generator " + std::to_string(r + 1) + " must have " +
                             std::to_string(n) + " entries");
        for (size_t c = 0; c < static_cast<size_t>(n); ++c)
            m.at(r, c) = detail::parse_scalar_field(g[r][c],
                                                    "generator " + std::to_string(r + 1));
    }
    return {static_cast<size_t>(n), std::move(m)};
}

namespace detail {

/// subset keys are comma-separated ascending 1-based indices; "" is the
/// empty subset (degree 0)
inline uint32_t parse_subset_key(const std::string& key, size_t n, int degree) {
    uint32_t mask = 0;
    int count = 0;
    size_t pos = 0;
    long long prev = 0;
    while (pos < key.size()) {
        size_t comma = key.find(',', pos);
        if (comma == std::string::npos) comma = key.size();
        const std::string tok = key.substr(pos, comma - pos);
        long long v = 0;
        try {
            size_t used = 0;
            v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("subset key '" + key + "' is not a comma-separated index list");
        }
        if (v < 1 || v > static_cast<long long>(n))
            throw ParseError("subset index " + tok + " out of range 1.." + std::to_string(n));
        if (v <= prev)
            throw ParseError("subset key '" + key + "' must be strictly increasing");
        prev = v;
        mask |= 1u << (v - 1);
        ++count;
        pos = comma + (comma < key.size() ? 1 : 0);
    }
    if (count != degree)
        throw ParseError("subset key '" + key + "' has " + std::to_string(count) +
                         " indices but the form degree is " + std::to_string(degree));
    return mask;
}

inline std::string subset_key(uint32_t mask, size_t n) {
    std::string out;
    for (size_t i = 0; i < n; ++i) {
        if (!(mask & (1u << i))) continue;
        if (!out.empty()) out += ",";
        out += std::to_string(i + 1);
    }
    return out;
}

} // namespace detail

/// Form file: { "degree": int, "terms": [ {"mode": [int x n], "trig":
/// "cos"|"sin", "coeffs": { "subset": ScalarText }} ] }. Input coefficients
/// live at 2*pi-grade zero.
inline torus::TrigForm parse_form(const Json& j, size_t n) {
    if (!j.is_object() || !j.contains("degree"))
        throw ParseError("form file needs \"degree\" and \"terms\"");
    const long long deg = detail::int_field(j["degree"], "\"degree\"");
    if (deg < 0 || deg > static_cast<long long>(n))
        throw ParseError("\"degree\" must lie in 0.." + std::to_string(n));
    torus::TrigForm f(n, static_cast<int>(deg));
    if (!j.contains("terms")) return f;
    if (!j["terms"].is_array()) throw ParseError("\"terms\" must be an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("mode") || !t.contains("trig") ||
            !t.contains("coeffs"))
            throw ParseError("each term needs \"mode\", \"trig\" and \"coeffs\"");
        const auto& mj = t["mode"];
        if (!mj.is_array() || mj.size() != n)
            throw ParseError("\"mode\" must be an integer vector of length " +
                             std::to_string(n));
        torus::Mode k(n);
        for (size_t i = 0; i < n; ++i) k[i] = detail::int_field(mj[i], "\"mode\" entry");
        const std::string trig = t["trig"].is_string() ? t["trig"].get<std::string>() : "";
        if (trig != "cos" && trig != "sin")
            throw ParseError("\"trig\" must be \"cos\" or \"sin\"");
        if (!t["coeffs"].is_object()) throw ParseError("\"coeffs\" must be an object");
        for (const auto& [key, val] : t["coeffs"].items()) {
            const uint32_t mask = detail::parse_subset_key(key, n, static_cast<int>(deg));
            Scalar c = detail::parse_scalar_field(val, "coefficient '" + key + "'");
            f.add(k, trig == "cos" ? torus::TrigForm::Trig::Cos : torus::TrigForm::Trig::Sin,
                  mask, torus::Pi2(c));
        }
    }
    return f;
}

/// Canonical form emitter for grade-zero forms (the input grammar cannot
/// carry the symbolic 2*pi unit, so graded output is refused, not mangled).
inline Json print_form(const torus::TrigForm& f) {
    Json j;
    j["degree"] = f.degree();
    Json terms = Json::array();
    auto emit = [&](const torus::Mode& k, const char* trig,
                    const std::map<uint32_t, torus::Pi2>& slot) {
        if (slot.empty()) return;
        Json t;
        Json mode = Json::array();
        for (long long v : k) mode.push_back(v);
        t["mode"] = std::move(mode);
        t["trig"] = trig;
        Json coeffs = Json::object();
        for (const auto& [mask, c] : slot) {
            const auto& ts = c.terms();
            if (ts.size() != 1 || ts.begin()->first != 0)
                throw InputError("form carries a nonzero 2*pi grading and has no file syntax");
            coeffs[detail::subset_key(mask, f.n())] = ts.begin()->second.str();
        }
        t["coeffs"] = std::move(coeffs);
        terms.push_back(std::move(t));
    };
    for (const auto& [k, part] : f.terms()) {
        emit(k, "cos", part.cos);
        emit(k, "sin", part.sin);
    }
    j["terms"] = std::move(terms);
    return j;
}

/// Betti report: { "algebra", "route", "betti", "euler", "representatives" }.
inline Json betti_json(const std::string& algebra, const BettiTable& t,
                       bool with_representatives) {
    Json j;
    j["algebra"] = algebra;
    j["route"] = t.route;
    j["betti"] = t.betti;
    j["euler"] = t.euler();
    if (with_representatives) {
        Json reps = Json::object();
        for (size_t k = 0; k < t.representatives.size(); ++k) {
            if (t.representatives[k].empty()) continue;
            Json list = Json::array();
            for (const auto& vec : t.representatives[k]) {
                Json row = Json::array();
                for (const auto& s : vec) row.push_back(s.str());
                list.push_back(std::move(row));
            }
            reps[std::to_string(k)] = std::move(list);
        }
        j["representatives"] = std::move(reps);
    }
    return j;
}

inline Json gh_json(const GHReport& r, bool with_representatives = false) {
    Json j;
    j["verdict"] = r.verdict();
    j["theorem"] = to_string(r.theorem);
    Json audit = Json::array();
    for (const auto& a : r.audit) {
        Json e;
        e["hypothesis"] = a.hypothesis;
        e["status"] = to_string(a.status);
        if (!a.note.empty()) e["note"] = a.note;
        audit.push_back(std::move(e));
    }
    j["audit"] = std::move(audit);
    if (r.betti_table) {
        j["betti"] = r.betti_table->betti;
        if (with_representatives) {
            Json reps = Json::object();
            for (size_t k = 0; k < r.betti_table->representatives.size(); ++k) {
                if (r.betti_table->representatives[k].empty()) continue;
                Json list = Json::array();
                for (const auto& vec : r.betti_table->representatives[k]) {
                    Json row = Json::array();
                    for (const auto& s : vec) row.push_back(s.str());
                    list.push_back(std::move(row));
                }
                reps[std::to_string(k)] = std::move(list);
            }
            j["representatives"] = std::move(reps);
        }
    }
    Json checks = Json::array();
    for (const auto& c : r.cross_checks) {
        Json e;
        e["description"] = c.description;
        e["left"] = c.left;
        e["right"] = c.right;
        e["equal"] = c.equal;
        checks.push_back(std::move(e));
    }
    j["cross_checks"] = std::move(checks);
    if (!r.refusal_reason.empty()) j["refusal_reason"] = r.refusal_reason;
    if (!r.advisory.empty()) j["advisory"] = r.advisory;
    return j;
}

inline Json error_json(const std::string& code, const std::string& message) {
    Json j;
    j["error"] = code;
    j["message"] = message;
    return j;
}

} // namespace liecoh::io
