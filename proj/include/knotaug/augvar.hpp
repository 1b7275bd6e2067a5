#ifndef KNOTAUG_AUGVAR_HPP
#define KNOTAUG_AUGVAR_HPP

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "knotaug/comm_poly.hpp"
#include "knotaug/errors.hpp"
#include "knotaug/h0.hpp"
#include "knotaug/numbers.hpp"

namespace knotaug {

/// Finite set of points (x, y, Z) in (F_p*)^3.
struct VarietyPointSet {
    std::int64_t p = 0;
    std::set<std::array<std::int64_t, 3>> points;

    friend bool operator==(const VarietyPointSet&, const VarietyPointSet&) = default;
};

/// A variety point together with the killing assignment of the a_{i,j}.
struct VarietyWitness {
    std::array<std::int64_t, 3> point;
    std::vector<std::int64_t> assignment; // indexed like the presentation ring
};

struct EnumerationOptions {
    std::uint64_t budget = 100'000'000; // evaluated assignments
    bool witnesses = false;
};

struct EnumerationResult {
    VarietyPointSet variety;
    std::vector<VarietyWitness> witnesses;
    std::uint64_t evaluated = 0;
};

namespace detail {

struct CompiledTerm {
    std::int64_t coeff;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> powers; // (var, exp)
};

/// Static variable order chosen so generators complete as early as possible:
/// repeatedly pick the variable whose cheapest containing generator has the
/// fewest unchosen variables left.
inline std::vector<std::size_t> greedy_order(const std::vector<std::set<std::size_t>>& supports,
                                             std::size_t nv) {
    std::vector<std::size_t> order;
    std::set<std::size_t> chosen;
    while (order.size() < nv) {
        std::size_t best = nv;
        std::size_t best_score = nv + 2;
        for (std::size_t v = 0; v < nv; ++v) {
            if (chosen.count(v)) continue;
            std::size_t score = nv + 1;
            for (const auto& s : supports) {
                if (!s.count(v)) continue;
                std::size_t remaining = 0;
                for (std::size_t w : s)
                    if (!chosen.count(w)) ++remaining;
                score = std::min(score, remaining);
            }
            if (score < best_score) {
                best_score = score;
                best = v;
            }
        }
        order.push_back(best);
        chosen.insert(best);
    }
    return order;
}

} // namespace detail

/// Exact zero locus of the presentation over F_p: all (lambda, mu, U) in
/// (F_p*)^3 admitting a_{i,j} values killing every generator.  Enumeration is
/// depth-first over a static variable order with early pruning: a generator
/// is evaluated as soon as its variables are assigned.  The budget bounds the
/// number of evaluated assignments (DFS nodes).
inline EnumerationResult enumerate_variety(const H0Presentation& pres, std::int64_t p,
                                           EnumerationOptions opt = {}) {
    if (!is_prime(p)) throw usage_error("enumerate_variety: p must be prime");
    const std::size_t nv = pres.ring->size();
    const auto& gens = pres.generators;

    std::vector<std::set<std::size_t>> supports;
    supports.reserve(gens.size());
    for (const auto& g : gens) {
        std::set<std::size_t> s;
        for (const auto& [mono, c] : g.terms())
            for (std::size_t v = 0; v < nv; ++v)
                if (mono[v]) s.insert(v);
        supports.push_back(std::move(s));
    }
    const std::vector<std::size_t> order = detail::greedy_order(supports, nv);
    std::vector<std::size_t> pos(nv);
    for (std::size_t d = 0; d < nv; ++d) pos[order[d]] = d;

    // generators checked once all their variables are assigned
    std::vector<std::vector<std::size_t>> gens_at_depth(nv + 1);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        std::size_t depth = 0;
        for (std::size_t v : supports[gi]) depth = std::max(depth, pos[v] + 1);
        gens_at_depth[depth].push_back(gi);
    }

    EnumerationResult result;
    result.variety.p = p;
    std::vector<std::int64_t> assign(nv, 0);
    std::vector<std::vector<detail::CompiledTerm>> compiled(gens.size());

    auto eval_compiled = [&](const std::vector<detail::CompiledTerm>& terms) {
        std::int64_t sum = 0;
        for (const auto& t : terms) {
            std::int64_t v = t.coeff;
            for (const auto& [var, exp] : t.powers) v = mod_mul(v, mod_pow(assign[var], exp, p), p);
            sum = (sum + v) % p;
        }
        return sum;
    };

    for (std::int64_t lv = 1; lv < p; ++lv)
        for (std::int64_t mv = 1; mv < p; ++mv)
            for (std::int64_t uv = 1; uv < p; ++uv) {
                for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                    compiled[gi].clear();
                    for (const auto& [mono, c] : gens[gi].terms()) {
                        detail::CompiledTerm t{c.eval_mod(lv, mv, uv, p), {}};
                        for (std::uint32_t v = 0; v < nv; ++v)
                            if (mono[v]) t.powers.emplace_back(v, mono[v]);
                        if (t.coeff != 0 || !t.powers.empty()) compiled[gi].push_back(std::move(t));
                    }
                }
                auto dfs = [&](auto&& self, std::size_t depth) -> void {
                    for (std::size_t gi : gens_at_depth[depth])
                        if (eval_compiled(compiled[gi]) != 0) return;
                    if (depth == nv) {
                        result.variety.points.insert({lv, mv, uv});
                        if (opt.witnesses) result.witnesses.push_back({{lv, mv, uv}, assign});
                        return;
                    }
                    for (std::int64_t val = 0; val < p; ++val) {
                        if (++result.evaluated > opt.budget)
                            throw resource_error(
                                "enumerate_variety: budget of " + std::to_string(opt.budget) +
                                    " evaluated assignments exceeded",
                                result.evaluated);
                        assign[order[depth]] = val;
                        self(self, depth + 1);
                    }
                };
                dfs(dfs, 0);
            }
    return result;
}

/// V(unknot) in closed form: (x, y, Z) in (F_p*)^3 with Z - x - y + xy = 0.
inline VarietyPointSet unknot_variety(std::int64_t p) {
    if (!is_prime(p)) throw usage_error("unknot_variety: p must be prime");
    VarietyPointSet V{p, {}};
    for (std::int64_t x = 1; x < p; ++x)
        for (std::int64_t y = 1; y < p; ++y) {
            const std::int64_t Z = mod_reduce(x + y - mod_mul(x, y, p), p);
            if (Z != 0) V.points.insert({x, y, Z});
        }
    return V;
}

/// (x, y, Z) -> (x^a y^b Z^c, y^a Z^d, Z), an invertible monomial change of
/// variables on (F_p*)^3 when a = +-1.
inline VarietyPointSet monomial_map(const VarietyPointSet& V, int a, std::int64_t b,
                                    std::int64_t c, std::int64_t d) {
    if (a != 1 && a != -1) throw usage_error("monomial_map: a must be +1 or -1");
    VarietyPointSet out{V.p, {}};
    for (const auto& [x, y, Z] : V.points) {
        const std::int64_t nx =
            mod_mul(mod_mul(mod_pow(x, a, V.p), mod_pow(y, b, V.p), V.p), mod_pow(Z, c, V.p), V.p);
        const std::int64_t ny = mod_mul(mod_pow(y, a, V.p), mod_pow(Z, d, V.p), V.p);
        out.points.insert({nx, ny, Z});
    }
    return out;
}

/// For every (x, y, Z) in V, confirm that P|_{mu=y, U=Z} has a root in F_p
/// (checked by scanning all residues).  Violations falsify the containment.
struct ContainmentReport {
    std::size_t checked = 0;
    std::vector<std::array<std::int64_t, 3>> violations;
    bool pass() const { return violations.empty(); }
};

inline ContainmentReport containment_check(const VarietyPointSet& V, const CommPoly& P_in_T) {
    if (P_in_T.ring()->size() != 1) throw usage_error("containment_check: P must be univariate");
    const std::uint32_t deg = P_in_T.degree_in(0);
    ContainmentReport rep;
    for (const auto& pt : V.points) {
        const auto& [x, y, Z] = pt;
        std::vector<std::int64_t> coeffs(deg + 1);
        for (std::uint32_t k = 0; k <= deg; ++k) {
            const LaurentPoly c = P_in_T.univariate_coefficient(0, k);
            if (c.involves_lambda())
                throw usage_error("containment_check: coefficient involves lambda");
            coeffs[k] = c.eval_mod(1, y, Z, V.p);
        }
        bool found = false;
        for (std::int64_t t = 0; t < V.p && !found; ++t) {
            std::int64_t v = 0;
            for (std::uint32_t k = deg + 1; k-- > 0;) v = (mod_mul(v, t, V.p) + coeffs[k]) % V.p;
            found = v == 0;
        }
        ++rep.checked;
        if (!found) rep.violations.push_back(pt);
    }
    return rep;
}

} // namespace knotaug

#endif
