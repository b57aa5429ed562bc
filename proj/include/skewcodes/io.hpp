#pragma once

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "skew_cyclic.hpp"

namespace skewcodes {

// ---- element and polynomial text forms ----

inline std::string format_element(const FqElem& a) { return std::to_string(a.value()); }

inline FqElem parse_element(const FieldCtx& ctx, const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        raise(Errc::DomainMismatch, "bad element literal: " + s);
    }
    if (pos != s.size()) raise(Errc::DomainMismatch, "bad element literal: " + s);
    if (v >= ctx.q()) raise(Errc::DomainMismatch, "element literal out of range: " + s);
    return FqElem(ctx, v);
}

/// RElem text form: `std:[b0,b1,b2,b3]` or `eta:[a1,a2,a3,a4]`.
inline std::string format_relem(const RElem& r, bool std_basis = false) {
    const auto coords = std_basis ? r.std_coords() : r.eta_coords();
    std::ostringstream os;
    os << (std_basis ? "std:[" : "eta:[");
    for (std::size_t i = 0; i < 4; ++i) os << (i ? "," : "") << coords[i].value();
    os << "]";
    return os.str();
}

inline RElem parse_relem(const FieldCtx& ctx, const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) raise(Errc::DomainMismatch, "bad RElem literal: " + s);
    std::string tag = s.substr(0, colon);
    std::string rest = s.substr(colon + 1);
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
        raise(Errc::DomainMismatch, "bad RElem literal: " + s);
    std::array<FqElem, 4> c;
    std::stringstream body(rest.substr(1, rest.size() - 2));
    std::string tok;
    std::size_t i = 0;
    while (std::getline(body, tok, ',')) {
        if (i >= 4) raise(Errc::DomainMismatch, "RElem literal needs 4 coordinates");
        c[i++] = parse_element(ctx, tok);
    }
    if (i != 4) raise(Errc::DomainMismatch, "RElem literal needs 4 coordinates");
    if (tag == "eta") return RElem::from_eta(c[0], c[1], c[2], c[3]);
    if (tag == "std") return RElem::from_std(c[0], c[1], c[2], c[3]);
    raise(Errc::DomainMismatch, "RElem literal tag must be std or eta");
}

/// Coefficient list, low-to-high: `[2,0,1]` is x^2 + 2.
inline std::string format_poly(const SkewPoly<FqElem>& f) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i <= f.degree(); ++i)
        os << (i ? "," : "") << f.coeff(static_cast<std::size_t>(i)).value();
    os << "]";
    return os.str();
}

/// Human-readable form, e.g. "x^2 + 2" (element literals as coefficients).
inline std::string format_poly_pretty(const SkewPoly<FqElem>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        FqElem c = f.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c.value() != 1) os << c.value();
        if (i > 0) {
            if (c.value() != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

inline SkewPoly<FqElem> parse_poly(const FieldCtx& ctx, const std::string& s, int auto_pow) {
    std::string body = s;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') raise(Errc::DomainMismatch, "unterminated coefficient list: " + s);
        body = body.substr(1, body.size() - 2);
    }
    std::vector<FqElem> coeffs;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(parse_element(ctx, tok));
    return SkewPoly<FqElem>(ctx, std::move(coeffs), auto_pow);
}

// ---- code spec files ----

/// On-disk description of a skew cyclic code over R:
/// {p, m, modulus?, n, g1: [...], g2: [...], g3: [...], g4: [...]}
/// with coefficients as F_q integer literals, low-to-high.
struct CodeSpec {
    long long p = 0;
    int m = 1;
    std::optional<std::vector<long long>> modulus;
    std::size_t n = 0;
    std::array<std::vector<long long>, 4> g;
};

inline CodeSpec code_spec_from_json(const nlohmann::json& j) {
    CodeSpec s;
    try {
        s.p = j.at("p").get<long long>();
        s.m = j.at("m").get<int>();
        if (j.contains("modulus")) s.modulus = j.at("modulus").get<std::vector<long long>>();
        s.n = j.at("n").get<std::size_t>();
        const char* names[4] = {"g1", "g2", "g3", "g4"};
        for (int i = 0; i < 4; ++i)
            s.g[static_cast<std::size_t>(i)] = j.at(names[i]).get<std::vector<long long>>();
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::DomainMismatch, std::string("bad code spec: ") + e.what());
    }
    return s;
}

inline CodeSpec load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::DomainMismatch, "cannot open spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::DomainMismatch, std::string("bad JSON in ") + path + ": " + e.what());
    }
    return code_spec_from_json(j);
}

/// A constructed code together with the field context that owns its elements.
struct BuiltCode {
    std::unique_ptr<FieldCtx> ctx;
    std::unique_ptr<SkewCyclicCodeR> code;
};

inline BuiltCode build_code(const CodeSpec& spec) {
    BuiltCode out;
    out.ctx = spec.modulus ? std::make_unique<FieldCtx>(spec.p, spec.m, *spec.modulus)
                           : std::make_unique<FieldCtx>(spec.p, spec.m);
    std::array<SkewPoly<FqElem>, 4> gens{
        make_fq_poly(*out.ctx, spec.g[0], 1), make_fq_poly(*out.ctx, spec.g[1], 1),
        make_fq_poly(*out.ctx, spec.g[2], 1), make_fq_poly(*out.ctx, spec.g[3], 1)};
    out.code = std::make_unique<SkewCyclicCodeR>(*out.ctx, spec.n, gens);
    return out;
}

}  // namespace skewcodes
