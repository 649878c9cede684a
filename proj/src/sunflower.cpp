#include "ffrunner/sunflower.hpp"

#include <algorithm>
#include <bit>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ffr {

namespace {

Mat pair_rows(const Poly& f, const Poly& g, int D) {
    const int ambient = D + 2;
    Mat m(f.field(), 4, ambient);
    auto fill = [&](int r, const Poly& h, int shift) {
        auto row = h.shifted_row(ambient, shift);
        for (int c = 0; c < ambient; ++c) m.at(r, c) = row[static_cast<std::size_t>(c)];
    };
    fill(0, f, 0);
    fill(1, f, 1);
    fill(2, g, 0);
    fill(3, g, 1);
    return m;
}

int pair_span_rank(const Poly& f, const Poly& g, int D) {
    Mat m = pair_rows(f, g, D);
    return rref(m);
}

void require_normalized(const std::vector<Poly>& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].is_zero() || !family[i].is_monic())
            throw std::invalid_argument("family must consist of monic nonzero polynomials");
        for (std::size_t j = 0; j < i; ++j)
            if (family[i] == family[j]) throw std::invalid_argument("family contains duplicates");
    }
}

int max_degree(const std::vector<Poly>& family) {
    int d = 0;
    for (const Poly& f : family) d = std::max(d, f.degree());
    return d;
}

// Deterministic branch and bound for the largest clique; candidates are
// visited in ascending order and only strict improvements are kept, so the
// first maximum found is the lexicographically least one. A greedy coloring
// of the candidate set bounds the clique number without reordering anything.
struct CliqueSearch {
    int nv;
    const std::vector<char>& adj;  // nv * nv
    std::uint64_t node_cap;
    std::uint64_t nodes = 0;
    std::vector<int> best, cur;
    std::vector<int> color_scratch;

    int color_bound(const std::vector<int>& cand) {
        color_scratch.assign(cand.size(), -1);
        std::vector<std::uint64_t> used((cand.size() + 63) / 64);
        int ncolors = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            std::fill(used.begin(), used.end(), 0);
            for (std::size_t j = 0; j < i; ++j)
                if (adj[static_cast<std::size_t>(cand[i]) * nv + cand[j]]) {
                    int cj = color_scratch[j];
                    used[static_cast<std::size_t>(cj) >> 6] |= std::uint64_t(1) << (cj & 63);
                }
            int c = 0;
            for (std::size_t w = 0; w < used.size(); ++w) {
                if (used[w] != ~std::uint64_t(0)) {
                    c = static_cast<int>((w << 6) + static_cast<std::size_t>(std::countr_one(used[w])));
                    break;
                }
            }
            color_scratch[i] = c;
            ncolors = std::max(ncolors, c + 1);
        }
        return ncolors;
    }

    void extend(const std::vector<int>& cand) {
        if (cur.size() + cand.size() <= best.size()) return;
        if (cand.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (cur.size() + static_cast<std::size_t>(color_bound(cand)) <= best.size()) return;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (cur.size() + (cand.size() - i) <= best.size()) return;
            if (++nodes > node_cap) throw CapExceeded("sunflower clique search exceeded its node cap");
            const int v = cand[i];
            cur.push_back(v);
            std::vector<int> next;
            next.reserve(cand.size() - i);
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (adj[static_cast<std::size_t>(v) * nv + cand[j]]) next.push_back(cand[j]);
            extend(next);
            cur.pop_back();
        }
    }
};

}  // namespace

Subspace pair_core(const Poly& f, const Poly& g, int D) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("pair core of a zero polynomial");
    if (make_monic(f) == make_monic(g))
        throw std::invalid_argument("pair core needs two distinct speeds");
    if (D < std::max(f.degree(), g.degree()))
        throw std::invalid_argument("D must be at least the maximal degree");
    return Subspace::span_of(pair_rows(f, g, D)).perp();
}

SunflowerCheck is_sunflower(const std::vector<Poly>& petals, int D) {
    if (petals.size() < 2) throw std::invalid_argument("a sunflower needs at least two petals");
    require_normalized(petals);
    if (D < max_degree(petals)) throw std::invalid_argument("D must be at least the maximal degree");
    Subspace core = pair_core(petals[0], petals[1], D);
    for (std::size_t i = 0; i < petals.size(); ++i)
        for (std::size_t j = i + 1; j < petals.size(); ++j) {
            if (i == 0 && j == 1) continue;
            if (pair_core(petals[i], petals[j], D) != core) return {false, std::move(core)};
        }
    return {true, std::move(core)};
}

Classification classify(const std::vector<Poly>& petals, int D) {
    if (petals.size() < 2) throw std::invalid_argument("classification needs at least two petals");
    auto check = is_sunflower(petals, D);
    if (!check.ok || check.core.codim() != 4)
        throw std::invalid_argument("classification applies to codimension-4 sunflowers");
    const Field& field = petals.front().field();
    Classification out;

    // TYPE I: factor out the common gcd; quotients must be at most quadratic
    // and pairwise coprime.
    Poly p = petals[0];
    for (std::size_t i = 1; i < petals.size(); ++i) p = gcd(p, petals[i]);
    std::vector<Poly> quot;
    quot.reserve(petals.size());
    bool type1 = true;
    for (const Poly& f : petals) {
        auto [q_, r_] = divmod(f, p);
        if (!r_.is_zero()) throw std::logic_error("gcd does not divide a petal");
        if (q_.degree() > 2) type1 = false;
        quot.push_back(std::move(q_));
    }
    if (type1)
        for (std::size_t i = 0; i < quot.size() && type1; ++i)
            for (std::size_t j = i + 1; j < quot.size() && type1; ++j)
                if (gcd(quot[i], quot[j]).degree() != 0) type1 = false;
    out.type1 = type1;
    if (type1) {
        out.p = p;
        for (std::uint64_t lam = 0; lam < field.q(); ++lam) {
            for (const Poly& q_ : quot)
                if (q_.degree() >= 1 && q_.eval(static_cast<Elem>(lam)) == 0) {
                    out.lambda_roots.push_back(static_cast<Elem>(lam));
                    break;
                }
        }
    }

    // TYPE II: every petal inside the span of the first two.
    if (petals.size() == 2) {
        out.type2 = true;
    } else {
        const int width = D + 1;
        Mat base(field, 2, width);
        for (int r = 0; r < 2; ++r) {
            auto row = petals[static_cast<std::size_t>(r)].shifted_row(width, 0);
            for (int c = 0; c < width; ++c) base.at(r, c) = row[static_cast<std::size_t>(c)];
        }
        bool type2 = true;
        for (std::size_t i = 2; i < petals.size() && type2; ++i) {
            Mat m(field, 3, width);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < width; ++c) m.at(r, c) = base.at(r, c);
            auto row = petals[i].shifted_row(width, 0);
            for (int c = 0; c < width; ++c) m.at(2, c) = row[static_cast<std::size_t>(c)];
            if (rref(m) != 2) type2 = false;
        }
        out.type2 = type2;
    }

    if (petals.size() >= 3 && !out.type1 && !out.type2)
        throw std::logic_error(
            "codimension-4 sunflower fits neither structure class; this is a bug or a genuine "
            "counterexample and needs investigation");
    return out;
}

std::pair<std::vector<Poly>, std::vector<Poly>> decompose(const std::vector<Poly>& family,
                                                          const std::vector<Poly>& petals,
                                                          const Subspace& core, int D) {
    require_normalized(family);
    if (core.codim() != 4) throw std::invalid_argument("decompose needs a codimension-4 core");
    std::vector<Poly> s_prime, s_double;
    for (const Poly& f : family) {
        bool is_petal = false;
        for (const Poly& g : petals)
            if (f == g) { is_petal = true; break; }
        if (is_petal) continue;
        Circulant a = circulant(f, 2, D);
        bool contains_core = true;
        for (int r = 0; r < core.dim() && contains_core; ++r)
            if (!in_kernel(a, core.basis_row(r))) contains_core = false;
        if (contains_core)
            s_prime.push_back(f);
        else
            s_double.push_back(f);
    }
    // Every kernel through the core must meet some petal kernel one
    // dimension above the core; fails when the sunflower is not maximal.
    for (const Poly& f : s_prime) {
        bool found = false;
        for (const Poly& g : petals)
            if (pair_span_rank(f, g, D) == 3) { found = true; break; }
        if (!found)
            throw std::logic_error("member of S' shares no codimension-3 intersection with a petal; "
                                   "the sunflower is likely not maximal");
    }
    return {std::move(s_prime), std::move(s_double)};
}

SunflowerReport max_sunflower(std::vector<Poly> family, int D, const SunflowerOptions& opts) {
    auto [norm, dropped] = normalize_speeds(std::move(family));
    (void)dropped;
    if (norm.empty()) throw std::invalid_argument("sunflower search over the empty family");
    const int maxdeg = max_degree(norm);
    if (D < 0) D = maxdeg;
    if (D < maxdeg) throw std::invalid_argument("D must be at least the maximal degree");

    SunflowerReport rep;
    rep.D = D;
    const int n = static_cast<int>(norm.size());

    struct Group {
        Subspace core;
        std::vector<std::pair<int, int>> edges;
    };
    std::map<std::vector<Elem>, Group> groups;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Subspace core = pair_core(norm[static_cast<std::size_t>(i)], norm[static_cast<std::size_t>(j)], D);
            if (core.codim() != 4) continue;
            auto key = core.key();
            auto it = groups.find(key);
            if (it == groups.end()) it = groups.emplace(std::move(key), Group{std::move(core), {}}).first;
            it->second.edges.emplace_back(i, j);
        }
    if (groups.empty()) return rep;  // found stays false

    std::vector<const Group*> order;
    order.reserve(groups.size());
    for (const auto& [key, g] : groups) order.push_back(&g);

    std::vector<std::vector<int>> results(order.size());
    auto solve_group = [&](std::size_t gi) {
        const Group& g = *order[gi];
        std::vector<int> verts;
        for (auto [i, j] : g.edges) {
            verts.push_back(i);
            verts.push_back(j);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        const int nv = static_cast<int>(verts.size());
        std::vector<int> local(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < nv; ++i) local[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;
        std::vector<char> adj(static_cast<std::size_t>(nv) * nv, 0);
        for (auto [i, j] : g.edges) {
            int a = local[static_cast<std::size_t>(i)], b = local[static_cast<std::size_t>(j)];
            adj[static_cast<std::size_t>(a) * nv + b] = 1;
            adj[static_cast<std::size_t>(b) * nv + a] = 1;
        }
        CliqueSearch cs{nv, adj, opts.node_cap, 0, {}, {}, {}};
        std::vector<int> cand(static_cast<std::size_t>(nv));
        for (int i = 0; i < nv; ++i) cand[static_cast<std::size_t>(i)] = i;
        cs.extend(cand);
        std::vector<int> clique;
        clique.reserve(cs.best.size());
        for (int v : cs.best) clique.push_back(verts[static_cast<std::size_t>(v)]);
        std::sort(clique.begin(), clique.end());
        results[gi] = std::move(clique);
    };

#ifdef _OPENMP
    if (opts.threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads)
        for (std::int64_t gi = 0; gi < static_cast<std::int64_t>(order.size()); ++gi)
            solve_group(static_cast<std::size_t>(gi));
    } else
#endif
    {
        for (std::size_t gi = 0; gi < order.size(); ++gi) solve_group(gi);
    }

    // full deterministic reduction: size first, then least index set
    std::size_t best = 0;
    for (std::size_t gi = 1; gi < order.size(); ++gi) {
        const auto& a = results[gi];
        const auto& b = results[best];
        if (a.size() > b.size() || (a.size() == b.size() && a < b)) best = gi;
    }

    rep.found = true;
    rep.core = order[best]->core;
    for (int idx : results[best]) rep.petals.push_back(norm[static_cast<std::size_t>(idx)]);
    rep.n = static_cast<int>(rep.petals.size());

    Classification cls = classify(rep.petals, D);
    rep.type1 = cls.type1;
    rep.type2 = cls.type2;
    rep.type1_p = cls.p;
    rep.lambda_roots = cls.lambda_roots;
    auto [sp, sd] = decompose(norm, rep.petals, *rep.core, D);
    rep.s_prime = std::move(sp);
    rep.s_double_prime = std::move(sd);
    return rep;
}

ContributionCheck contribution_bound_check(const std::vector<Poly>& ordered_family,
                                           const SunflowerReport& s, const Poly& f, int D,
                                           ContributionMode mode, const SunflowerOptions& opts) {
    require_normalized(ordered_family);
    if (!s.found || !s.core || s.core->codim() != 4)
        throw std::invalid_argument("contribution check needs a codimension-4 sunflower");
    if (D < 3) throw std::invalid_argument("contribution bound needs D >= 3 for integral terms");
    if (D < max_degree(ordered_family)) throw std::invalid_argument("D below the maximal degree");

    const Field& field = f.field();
    const std::uint64_t q = field.q();
    std::size_t pos = ordered_family.size();
    for (std::size_t i = 0; i < ordered_family.size(); ++i)
        if (ordered_family[i] == f) { pos = i; break; }
    if (pos == ordered_family.size()) throw std::invalid_argument("f is not in the family");
    for (const Poly& g : s.petals)
        if (g == f) throw std::invalid_argument("f must lie outside the sunflower");

    // Lemma-level guarantee only holds for a sunflower of maximal size.
    SunflowerOptions verify_opts = opts;
    if (max_sunflower(ordered_family, D, verify_opts).n != s.n)
        throw std::invalid_argument("sunflower is not of maximal size in the family");

    const std::uint64_t n = static_cast<std::uint64_t>(s.n);
    auto qp = [&](int e) {
        std::uint64_t r = 1;
        for (int i = 0; i < e; ++i) r *= q;
        return r;
    };

    std::uint64_t bound;
    std::vector<const Poly*> base;
    if (mode == ContributionMode::afterparty) {
        for (const Poly& g : s.petals) base.push_back(&g);
        bound = std::max(qp(D) - qp(D - 1), qp(D) - n * qp(D - 2) + (n - 1) * qp(D - 3));
    } else {
        if (n > q) throw std::invalid_argument("final-stage bound applies when the sunflower has at most q petals");
        // the ordering must start with the sunflower, and f must sit past
        // position q(n-1)+1
        if (ordered_family.size() < static_cast<std::size_t>(s.n))
            throw std::invalid_argument("family shorter than the sunflower");
        std::vector<Poly> prefix(ordered_family.begin(), ordered_family.begin() + s.n);
        std::sort(prefix.begin(), prefix.end(), poly_less);
        std::vector<Poly> petals_sorted = s.petals;
        std::sort(petals_sorted.begin(), petals_sorted.end(), poly_less);
        if (!(prefix == petals_sorted))
            throw std::invalid_argument("final-stage ordering must start with the sunflower");
        if (static_cast<std::uint64_t>(pos) + 1 <= q * (n - 1) + 1)
            throw std::invalid_argument("f is not in the final stage of the ordering");
        for (std::size_t i = 0; i < pos; ++i) base.push_back(&ordered_family[i]);
        const std::uint64_t half = qp(D - 1) + qp(D - 2);
        if (half % 2 != 0) throw std::logic_error("final-stage bound is not integral");
        bound = qp(D) - half / 2 - (n - 1) * (n - 2) / 2 * qp(D - 3);
    }

    const std::uint64_t total = checked_pow(q, static_cast<unsigned>(D + 2), opts.bitmap_cap_bits,
                                            "contribution bitmap");
    Bitset marked(total);
    for (const Poly* g : base)
        for_each_kernel_point(kernel_of(*g, 2, D), [&](std::uint64_t idx) { marked.set(idx); });
    std::uint64_t fresh = 0;
    for_each_kernel_point(kernel_of(f, 2, D), [&](std::uint64_t idx) { fresh += marked.test(idx) ? 0 : 1; });

    return {fresh, bound, fresh <= bound};
}

}  // namespace ffr
