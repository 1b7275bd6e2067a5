#ifndef KNOTAUG_OBSTRUCT_HPP
#define KNOTAUG_OBSTRUCT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knotaug/errors.hpp"
#include "knotaug/families.hpp"
#include "knotaug/numbers.hpp"
#include "knotaug/uni_poly.hpp"

namespace knotaug {

/// Exact decision of "y0 = Z0^n for some integer n".  For |Z0| = 1 the orbit
/// is finite; otherwise the candidate exponent is pinned by comparing prime
/// factorizations of numerators and denominators, then verified exactly.
struct PowerCheck {
    bool is_power = false;
    std::int64_t exponent = 0; // meaningful iff is_power
    std::string transcript;
};

inline PowerCheck power_check(const Rational& y0, const Rational& Z0) {
    if (y0 == 0 || Z0 == 0) throw domain_error("power_check: arguments must be nonzero");
    std::ostringstream log;
    auto power_of = [&](std::int64_t n) {
        Rational v = 1;
        Rational base = n >= 0 ? Z0 : Rational(1) / Z0;
        for (std::int64_t i = 0, e = n >= 0 ? n : -n; i < e; ++i) v *= base;
        return v;
    };
    if (y0 == 1) {
        log << "y0 = 1 = Z0^0";
        return {true, 0, log.str()};
    }
    if (Z0 == 1 || Z0 == -1) {
        log << "|Z0| = 1: orbit {" << to_string(Z0) << ", 1} checked exhaustively; ";
        if (y0 == Z0) {
            log << "y0 = Z0^1";
            return {true, 1, log.str()};
        }
        log << "y0 not in the orbit";
        return {false, 0, log.str()};
    }
    // |Z0| != 1: compare factorizations.  Exponents of y0 and Z0 at every
    // prime must satisfy a_p = n * b_p for one integer n, and signs must agree.
    auto exponents = [](const Rational& q) {
        std::vector<std::pair<Integer, long>> out;
        if (int_abs(numerator(q)) != 1)
            for (auto& [p, e] : factorize(numerator(q))) out.emplace_back(p, e);
        if (denominator(q) != 1)
            for (auto& [p, e] : factorize(denominator(q))) out.emplace_back(p, -e);
        return out;
    };
    const auto ze = exponents(Z0);
    const auto ye = exponents(y0);
    // candidate n from the first prime of Z0
    const Integer& p0 = ze.front().first;
    const long b0 = ze.front().second;
    long a0 = 0;
    for (const auto& [p, e] : ye)
        if (p == p0) a0 = e;
    if (a0 % b0 != 0) {
        log << "exponent of " << to_string(p0) << " in y0 (" << a0 << ") is not a multiple of its exponent in Z0 (" << b0 << ")";
        return {false, 0, log.str()};
    }
    const std::int64_t n = a0 / b0;
    if (power_of(n) == y0) {
        log << "verified y0 = Z0^" << n;
        return {true, n, log.str()};
    }
    log << "only candidate exponent n = " << n << " fails: Z0^" << n
        << " = " << to_string(power_of(n)) << " != y0";
    return {false, 0, log.str()};
}

inline bool not_a_power(const Rational& y0, const Rational& Z0, std::string* transcript = nullptr) {
    PowerCheck pc = power_check(y0, Z0);
    if (transcript) *transcript = pc.transcript;
    return !pc.is_power;
}

/// A no-rational-root certificate for one specialization P|_{mu=y0, U=Z0}.
struct Certificate {
    std::string family;             // "torus" or "fig8"
    int m = 0;                      // torus index (ignored for fig8)
    Rational y0, Z0;
    RationalUniPoly specialization; // P|_{mu=y0, U=Z0} over Q
    std::vector<Integer> cleared;   // primitive integer form, index = degree
    struct Candidate {
        Rational value;       // candidate rational root, lowest terms
        Rational poly_value;  // exact nonzero value of the specialization there
        Integer cleared_value; // independent big-integer evaluation, nonzero
    };
    std::vector<Candidate> candidates;
    std::string power_transcript;

    /// Re-verify every candidate through the integer path only.
    bool reverify() const {
        for (const auto& c : candidates)
            if (eval_integer_poly(cleared, numerator(c.value), denominator(c.value)) == 0)
                return false;
        return true;
    }
};

namespace detail {

inline Certificate make_certificate(std::string family, int m, const Rational& y0,
                                    const Rational& Z0, const RationalUniPoly& spec,
                                    std::string power_transcript) {
    Certificate cert{std::move(family), m, y0, Z0, spec, primitive_integer_form(spec), {},
                     std::move(power_transcript)};
    // candidate list of the rational root theorem, lowest terms, deduplicated
    std::set<Rational> cands;
    std::size_t low = 0;
    std::vector<Integer> cf = cert.cleared;
    while (cf[low] == 0) ++low;
    if (low == 0) { // otherwise 0 is a root and no certificate would exist
        for (const Integer& pn : positive_divisors(cf.front()))
            for (const Integer& qd : positive_divisors(cf.back())) {
                Rational r(pn, qd);
                cands.insert(r);
                cands.insert(-r);
            }
    }
    for (const Rational& r : cands) {
        Certificate::Candidate c{r, spec(r),
                                 eval_integer_poly(cert.cleared, numerator(r), denominator(r))};
        if (c.poly_value == 0 || c.cleared_value == 0)
            throw verification_failure("certificate: candidate " + to_string(r) +
                                       " is actually a root");
        cert.candidates.push_back(std::move(c));
    }
    return cert;
}

} // namespace detail

/// Refusal: the specialization does have a rational root.
struct TorusCertificateResult {
    std::optional<Certificate> certificate;
    std::optional<Rational> refusal_root;
    bool granted() const { return certificate.has_value(); }
};

inline TorusCertificateResult torus_certificate(int m, const Rational& y0, const Rational& Z0) {
    if (m < 1) throw domain_error("torus_certificate: m must be >= 1");
    if (y0 == 0 || y0 == 1) throw domain_error("torus_certificate: y0 must avoid {0, 1}");
    if (Z0 == 0) throw domain_error("torus_certificate: Z0 must be nonzero");
    std::string transcript;
    if (!not_a_power(y0, Z0, &transcript))
        throw domain_error("torus_certificate: side condition fails, y0 is a power of Z0 (" +
                           transcript + ")");
    const RationalUniPoly spec = specialize_T_poly(torus_family(m).P, y0, Z0);
    const std::set<Rational> roots = rational_roots(spec);
    if (!roots.empty()) return {std::nullopt, *roots.begin()};
    return {detail::make_certificate("torus", m, y0, Z0, spec, transcript), std::nullopt};
}

/// The pinned figure-eight certificate at (mu, U) = (-1, -2) for the
/// reference closed form: specialization 2 - (3/2) T - 2 T^3, cleared to
/// 4 - 3T - 4T^3, candidates {+-1, +-2, +-4, +-1/2, +-1/4} all nonzero, and
/// the recorded values at +-1/2, +-1/4.  Any mismatch with the recorded data
/// raises verification_failure.
inline Certificate figure_eight_certificate() {
    const Rational y0 = -1, Z0 = -2;
    std::string transcript;
    if (!not_a_power(y0, Z0, &transcript))
        throw verification_failure("figure_eight_certificate: (-1, -2) power side condition");
    const RationalUniPoly spec = specialize_T_poly(figure_eight_reference(), y0, Z0);
    const RationalUniPoly pinned(
        {Rational(2), Rational(-3, 2), Rational(0), Rational(-2)});
    if (spec != pinned)
        throw verification_failure("figure_eight_certificate: specialization is not 2 - (3/2)T - 2T^3");
    if (!rational_roots(spec).empty())
        throw verification_failure("figure_eight_certificate: unexpected rational root");
    Certificate cert = detail::make_certificate("fig8", 0, y0, Z0, spec, transcript);
    if (cert.cleared != std::vector<Integer>{4, -3, 0, -4})
        throw verification_failure("figure_eight_certificate: cleared form is not 4 - 3T - 4T^3");
    auto value_at = [&](const Rational& r) { return spec(r); };
    const bool recorded = value_at(Rational(1, 2)) == 1 && value_at(Rational(-1, 2)) == 3 &&
                          value_at(Rational(1, 4)) == Rational(51, 32) &&
                          value_at(Rational(-1, 4)) == Rational(77, 32);
    if (!recorded)
        throw verification_failure("figure_eight_certificate: recorded candidate values mismatch");
    return cert;
}

/// Same certificate construction for the braid-derived figure-eight
/// polynomial; nothing is pinned beyond no-rational-root.
inline Certificate figure_eight_certificate_derived() {
    const Rational y0 = -1, Z0 = -2;
    std::string transcript;
    not_a_power(y0, Z0, &transcript);
    const RationalUniPoly spec =
        specialize_T_poly(figure_eight_derivation().derived, y0, Z0);
    const std::set<Rational> roots = rational_roots(spec);
    if (!roots.empty())
        throw verification_failure("figure_eight_certificate_derived: rational root " +
                                   to_string(*roots.begin()));
    return detail::make_certificate("fig8", 0, y0, Z0, spec, transcript);
}

/// Range scan: skip values failing the side conditions, return the first Z0
/// yielding a certificate; otherwise an exhaustion report.  First hit is
/// deterministic (lowest index wins).
struct SearchLogEntry {
    Rational Z0;
    std::string outcome; // "skipped: ..." | "refused: root r" | "certificate"
};

struct CertificateSearch {
    std::optional<Certificate> certificate;
    std::vector<SearchLogEntry> log;
    bool exhausted() const { return !certificate.has_value(); }
};

inline CertificateSearch certificate_search(int m, const Rational& y0,
                                            const std::vector<Rational>& z_range) {
    if (m < 1) throw domain_error("certificate_search: m must be >= 1");
    if (z_range.empty()) throw usage_error("certificate_search: empty Z range");
    CertificateSearch out;
    for (const Rational& Z0 : z_range) {
        if (Z0 == 0) {
            out.log.push_back({Z0, "skipped: Z0 = 0"});
            continue;
        }
        if (y0 == 0 || y0 == 1) {
            out.log.push_back({Z0, "skipped: y0 in {0, 1} violates the side condition"});
            continue;
        }
        std::string transcript;
        if (!not_a_power(y0, Z0, &transcript)) {
            out.log.push_back({Z0, "skipped: power relation (" + transcript + ")"});
            continue;
        }
        TorusCertificateResult res = torus_certificate(m, y0, Z0);
        if (res.granted()) {
            out.log.push_back({Z0, "certificate"});
            out.certificate = std::move(res.certificate);
            return out;
        }
        out.log.push_back({Z0, "refused: rational root " + to_string(*res.refusal_root)});
    }
    return out;
}

} // namespace knotaug

#endif
