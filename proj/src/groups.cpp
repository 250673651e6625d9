#include "schurdex/groups.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "schurdex/arith.hpp"
#include "schurdex/errors.hpp"
#include "schurdex/kernels.hpp"
#include "schurdex/numfields.hpp"

namespace schurdex {

using arith::i64;
using Elem = PresentedGroup::Elem;

namespace {

// Normal form while collecting: x^e y_1^{ys[0]} ... y_k^{ys[k-1]}.
struct Word {
    i64 e = 0;
    std::vector<i64> ys;
};

}  // namespace

PresentedGroup::PresentedGroup(i64 n, std::vector<GeneratorTriple> gens, std::vector<std::vector<i64>> twists,
                               std::size_t max_order)
    : n_(n), gens_(std::move(gens)), twists_(std::move(twists)) {
    if (n_ < 1) throw Error(ErrorKind::InconsistentPresentation, "n must be positive");
    if (gens_.size() > 3) throw Error(ErrorKind::UnsupportedGeneratorCount, std::to_string(gens_.size()) + " generators");
    if (twists_.size() + 1 < gens_.size()) throw Error(ErrorKind::InconsistentPresentation, "missing twist rows");
    for (std::size_t i = 0; i + 1 < gens_.size(); ++i)
        if (twists_[i].size() != gens_.size() - 1 - i)
            throw Error(ErrorKind::InconsistentPresentation, "twist row " + std::to_string(i) + " has the wrong length");

    long double size = static_cast<long double>(n_);
    for (auto& t : gens_) {
        if (t.a < 1) throw Error(ErrorKind::InconsistentPresentation, "generator order must be positive");
        t.b = arith::mod(t.b, n_);
        t.c = arith::mod(t.c, n_);
        if (arith::gcd(t.b, n_) != 1) throw Error(ErrorKind::InconsistentPresentation, "b is not a unit mod n");
        if (arith::powmod(t.b, t.a, n_) != 1 % n_)
            throw Error(ErrorKind::InconsistentPresentation, "b^a is not 1 mod n");
        if (arith::mod(t.c * (t.b - 1), n_) != 0)
            throw Error(ErrorKind::InconsistentPresentation, "c(b-1) is not 0 mod n");
        size *= static_cast<long double>(t.a);
    }
    if (size > static_cast<long double>(max_order))
        throw Error(ErrorKind::GroupTooLarge, "order exceeds " + std::to_string(max_order));
    order_ = static_cast<std::size_t>(size);

    const std::size_t k = gens_.size();
    // w·y_j when w has no letters beyond y_j.
    auto append_last = [&](Word& w, std::size_t j) {
        if (++w.ys[j] == gens_[j].a) {
            w.ys[j] = 0;
            w.e += gens_[j].c * beta(w.ys, j);
        }
        w.e = arith::mod(w.e, n_);
    };
    auto decode = [&](Elem g) {
        Word w;
        w.ys.resize(k);
        w.e = g % n_;
        i64 rest = g / n_;
        for (std::size_t i = 0; i < k; ++i) {
            w.ys[i] = rest % gens_[i].a;
            rest /= gens_[i].a;
        }
        return w;
    };

    right_y_.assign(k, std::vector<Elem>(order_));
    beta_.resize(order_);
    for (Elem g = 0; g < order_; ++g) {
        const Word w = decode(g);
        beta_[g] = beta(w.ys, k);
        for (std::size_t i = 0; i < k; ++i) {
            // y_j^{e_j} y_i = y_i (y_j x^{d_ij})^{e_j} for j > i.
            Word v = w;
            std::vector<i64> tail(v.ys.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.ys.end());
            std::fill(v.ys.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.ys.end(), 0);
            append_last(v, i);
            for (std::size_t j = i + 1; j < k; ++j)
                for (i64 r = 0; r < tail[j - i - 1]; ++r) {
                    append_last(v, j);
                    v.e = arith::mod(v.e + twists_[i][j - i - 1] * beta(v.ys, k), n_);
                }
            right_y_[i][g] = encode(v.e, v.ys);
        }
    }

    inverse_.resize(order_);
    orders_.resize(order_);
    for (Elem g = 0; g < order_; ++g) {
        Elem prev = 0, cur = g;
        i64 o = 1;
        while (cur != 0) {
            prev = cur;
            cur = multiply(cur, g);
            if (++o > static_cast<i64>(order_))
                throw Error(ErrorKind::InconsistentPresentation, "element without finite order");
        }
        orders_[g] = o;
        inverse_[g] = g == 0 ? 0 : prev;
    }
    check_consistency();
}

Elem PresentedGroup::encode(i64 e, const std::vector<i64>& ys) const {
    i64 r = 0;
    for (std::size_t i = gens_.size(); i-- > 0;) r = r * gens_[i].a + ys[i];
    return static_cast<Elem>(r * n_ + arith::mod(e, n_));
}

i64 PresentedGroup::beta(const std::vector<i64>& ys, std::size_t upto) const {
    i64 r = 1 % n_;
    for (std::size_t l = 0; l < upto; ++l) r = arith::mulmod(r, arith::powmod(gens_[l].b, ys[l], n_), n_);
    return r;
}

Elem PresentedGroup::times_x(Elem g, i64 s) const {
    const i64 e = g % n_;
    const Elem ypart = g - static_cast<Elem>(e);
    return ypart + static_cast<Elem>(arith::mod(e + arith::mulmod(arith::mod(s, n_), beta_[g], n_), n_));
}

Elem PresentedGroup::times_y(Elem g, std::size_t i) const { return right_y_[i][g]; }

void PresentedGroup::check_consistency() const {
    const auto gens = generators();
    const Elem x = x_power(1);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Elem yi = y(i);
        bool ok = power(yi, gens_[i].a) == x_power(gens_[i].c) && multiply(yi, x) == multiply(x_power(gens_[i].b), yi);
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            ok = ok && multiply(y(j), yi) == multiply(multiply(yi, y(j)), x_power(twists_[i][j - i - 1]));
        if (!ok) throw Error(ErrorKind::InconsistentPresentation, "relations fail for y" + std::to_string(i + 1));
    }
    for (Elem g = 0; g < order_; ++g)
        for (Elem s : gens)
            for (Elem t : gens)
                if (multiply(multiply(g, s), t) != multiply(g, multiply(s, t)))
                    throw Error(ErrorKind::InconsistentPresentation,
                                "(gs)t != g(st) at g = " + to_string(g) + ", s = " + to_string(s) + ", t = " + to_string(t));
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(order_ - 1));
    for (int trial = 0; trial < 1000; ++trial) {
        const Elem a = pick(rng), b = pick(rng), c = pick(rng);
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
            throw Error(ErrorKind::InconsistentPresentation, "associativity fails on a sampled triple");
    }
}

Elem PresentedGroup::x_power(i64 e) const { return static_cast<Elem>(arith::mod(e, n_)); }

Elem PresentedGroup::y(std::size_t i) const {
    if (gens_[i].a == 1) return x_power(gens_[i].c);
    std::vector<i64> ys(gens_.size(), 0);
    ys[i] = 1;
    return encode(0, ys);
}

std::vector<Elem> PresentedGroup::generators() const {
    std::vector<Elem> out{x_power(1)};
    for (std::size_t i = 0; i < gens_.size(); ++i) out.push_back(y(i));
    return out;
}

i64 PresentedGroup::x_exponent(Elem g) const { return g % n_; }

std::vector<i64> PresentedGroup::y_exponents(Elem g) const {
    std::vector<i64> ys(gens_.size());
    i64 rest = g / n_;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        ys[i] = rest % gens_[i].a;
        rest /= gens_[i].a;
    }
    return ys;
}

Elem PresentedGroup::multiply(Elem g, Elem h) const {
    Elem r = times_x(g, x_exponent(h));
    i64 rest = h / n_;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        for (i64 t = rest % gens_[i].a; t > 0; --t) r = times_y(r, i);
        rest /= gens_[i].a;
    }
    return r;
}

Elem PresentedGroup::power(Elem g, i64 k) const {
    k = arith::mod(k, orders_[g]);
    Elem r = 0;
    for (i64 i = 0; i < k; ++i) r = multiply(r, g);
    return r;
}

std::string PresentedGroup::to_string(Elem g) const {
    std::string out;
    auto factor = [&](const std::string& sym, i64 e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += sym;
        if (e != 1) out += "^" + std::to_string(e);
    };
    factor("x", x_exponent(g));
    const auto ys = y_exponents(g);
    for (std::size_t i = 0; i < ys.size(); ++i) factor("y" + std::to_string(i + 1), ys[i]);
    return out.empty() ? "1" : out;
}

PresentedGroup defining_group(const CyclotomicAlgebra& A, std::size_t max_order) {
    return PresentedGroup(A.n, A.gens, A.twists, max_order);
}

PresentedGroup defining_group(const CyclicCyclotomicAlgebra& A, std::size_t max_order) {
    return PresentedGroup(A.n, {GeneratorTriple{A.a, A.b, A.c}}, {}, max_order);
}

bool Subgroup::contains(Elem g) const { return std::binary_search(elements.begin(), elements.end(), g); }

namespace {

std::vector<Elem> close_under(const PresentedGroup& G, const std::vector<Elem>& gens, std::vector<char>& mark) {
    mark.assign(G.order(), 0);
    std::vector<Elem> out{0};
    mark[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (Elem s : gens) {
            const Elem h = G.multiply(out[i], s);
            if (!mark[h]) {
                mark[h] = 1;
                out.push_back(h);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Subgroup whole_group(const PresentedGroup& G) {
    Subgroup S;
    S.elements.resize(G.order());
    for (Elem g = 0; g < G.order(); ++g) S.elements[g] = g;
    S.gens = G.generators();
    return S;
}

Subgroup closure(const PresentedGroup& G, const std::vector<Elem>& gens) {
    std::vector<char> mark;
    Subgroup S;
    S.elements = close_under(G, gens, mark);
    for (Elem g : gens)
        if (g != 0) S.gens.push_back(g);
    return S;
}

Subgroup subgroup_from_elements(const PresentedGroup& G, std::vector<Elem> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup S;
    std::vector<char> mark(G.order(), 0);
    mark[0] = 1;
    for (Elem g : elements) {
        if (mark[g]) continue;
        S.gens.push_back(g);
        if (close_under(G, S.gens, mark).size() == elements.size()) break;
    }
    S.elements = std::move(elements);
    return S;
}

Subgroup center(const PresentedGroup& G, const Subgroup& S) { return centralizer(G, S, S); }

Subgroup centralizer(const PresentedGroup& G, const Subgroup& S, const Subgroup& T) {
    std::vector<Elem> keep;
    for (Elem g : S.elements)
        if (std::all_of(T.gens.begin(), T.gens.end(), [&](Elem t) { return G.multiply(g, t) == G.multiply(t, g); }))
            keep.push_back(g);
    return subgroup_from_elements(G, std::move(keep));
}

Subgroup derived_subgroup(const PresentedGroup& G, const Subgroup& S) {
    std::vector<Elem> gens;
    for (Elem a : S.gens)
        for (Elem b : S.gens) {
            const Elem c = G.commutator(a, b);
            if (c != 0) gens.push_back(c);
        }
    std::vector<char> mark;
    auto elements = close_under(G, gens, mark);
    for (bool grew = true; grew;) {
        grew = false;
        for (Elem s : S.gens)
            for (std::size_t i = 0; i < gens.size() && !grew; ++i) {
                const Elem h = G.conjugate(gens[i], s);
                if (!mark[h]) {
                    gens.push_back(h);
                    elements = close_under(G, gens, mark);
                    grew = true;
                }
            }
    }
    return subgroup_from_elements(G, std::move(elements));
}

bool is_p_group(const Subgroup& S, i64 p) {
    return arith::split_part(static_cast<i64>(S.order()), p).second == 1;
}

Subgroup sylow(const PresentedGroup& G, const Subgroup& S, i64 p) {
    const i64 target = arith::split_part(static_cast<i64>(S.order()), p).first;
    Subgroup P = closure(G, {});
    for (Elem g : S.elements) {
        if (static_cast<i64>(P.order()) == target) break;
        if (P.contains(g) || arith::split_part(G.element_order(g), p).second != 1) continue;
        auto gens = P.gens;
        gens.push_back(g);
        Subgroup Q = closure(G, gens);
        if (is_p_group(Q, p)) P = std::move(Q);
    }
    return P;
}

Subgroup intersection(const PresentedGroup& G, const Subgroup& A, const Subgroup& B) {
    std::vector<Elem> both;
    std::set_intersection(A.elements.begin(), A.elements.end(), B.elements.begin(), B.elements.end(),
                          std::back_inserter(both));
    return subgroup_from_elements(G, std::move(both));
}

Subgroup conjugate(const PresentedGroup& G, const Subgroup& S, Elem g) {
    Subgroup out;
    for (Elem h : S.elements) out.elements.push_back(G.conjugate(h, g));
    std::sort(out.elements.begin(), out.elements.end());
    for (Elem h : S.gens) out.gens.push_back(G.conjugate(h, g));
    return out;
}

std::vector<Elem> elements_of_order(const PresentedGroup& G, const Subgroup& S, i64 d) {
    std::vector<Elem> out;
    for (Elem g : S.elements)
        if (G.element_order(g) == d) out.push_back(g);
    return out;
}

bool is_abelian(const PresentedGroup& G, const Subgroup& S) {
    for (Elem a : S.gens)
        for (Elem b : S.gens)
            if (G.multiply(a, b) != G.multiply(b, a)) return false;
    return true;
}

bool is_cyclic(const PresentedGroup& G, const Subgroup& S) {
    return !elements_of_order(G, S, static_cast<i64>(S.order())).empty();
}

bool is_normal(const PresentedGroup& G, const Subgroup& S, const Subgroup& T) {
    for (Elem s : S.gens)
        for (Elem t : T.gens)
            if (!T.contains(G.conjugate(t, s))) return false;
    return true;
}

namespace {

// |S| = 2m with an element r of order m and some s ∉ ⟨r⟩ inverting r with s² = r^{m·half}.
bool has_inverting_extension(const PresentedGroup& G, const Subgroup& S, bool quaternion) {
    const i64 m = static_cast<i64>(S.order()) / 2;
    if (static_cast<i64>(S.order()) != 2 * m || m < 2) return false;
    for (Elem r : elements_of_order(G, S, m)) {
        const Subgroup R = closure(G, {r});
        const Elem rinv = G.inverse(r);
        const Elem target = quaternion ? G.power(r, m / 2) : 0;
        for (Elem s : S.elements) {
            if (R.contains(s)) continue;
            if (G.multiply(s, s) == target && G.conjugate(r, s) == rinv) return true;
        }
    }
    return false;
}

}  // namespace

bool is_dihedral(const PresentedGroup& G, const Subgroup& S) { return has_inverting_extension(G, S, false); }

bool is_generalized_quaternion(const PresentedGroup& G, const Subgroup& S) {
    const i64 N = static_cast<i64>(S.order());
    if (N < 8 || arith::split_part(N, 2).second != 1) return false;
    return has_inverting_extension(G, S, true);
}

i64 order_modulo(const PresentedGroup& G, Elem g, const Subgroup& N) {
    Elem cur = g;
    for (i64 k = 1;; ++k) {
        if (N.contains(cur)) return k;
        cur = G.multiply(cur, g);
    }
}

std::vector<std::vector<Elem>> conjugacy_classes(const PresentedGroup& G) {
    std::vector<char> seen(G.order(), 0);
    const auto gens = G.generators();
    std::vector<std::vector<Elem>> out;
    for (Elem g = 0; g < G.order(); ++g) {
        if (seen[g]) continue;
        std::vector<Elem> cls{g};
        seen[g] = 1;
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (Elem s : gens) {
                const Elem h = G.conjugate(cls[i], s);
                if (!seen[h]) {
                    seen[h] = 1;
                    cls.push_back(h);
                }
            }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

CharacterValues induced_faithful_character(const PresentedGroup& G) {
    const i64 n = G.n();
    std::vector<Elem> transversal;
    for (Elem t = 0; t < G.order(); t += static_cast<Elem>(n)) transversal.push_back(t);

    CharacterValues chi;
    chi.values.resize(G.order());
    for (i64 e = 0; e < n; ++e) {
        std::vector<i64> weights(static_cast<std::size_t>(n), 0);
        for (Elem t : transversal) ++weights[static_cast<std::size_t>(G.x_exponent(G.conjugate(G.x_power(e), t)))];
        chi.values[static_cast<std::size_t>(e)] = Cyclotomic::from_powers(n, weights);
    }
    if (inner_product(G, chi, chi) != Cyclotomic(1L))
        throw Error(ErrorKind::InducedNotIrreducible, "<chi, chi> != 1");
    return chi;
}

CharacterValues trivial_character(const PresentedGroup& G) {
    return CharacterValues{std::vector<Cyclotomic>(G.order(), Cyclotomic(1L))};
}

Cyclotomic inner_product(const PresentedGroup& G, const CharacterValues& chi, const CharacterValues& psi) {
    Cyclotomic sum;
    for (Elem g = 0; g < G.order(); ++g) {
        if (chi(g).is_zero() || psi(g).is_zero()) continue;
        sum += chi(g) * complex_conjugate(psi(g));
    }
    return sum * Cyclotomic(Rational(1, static_cast<long>(G.order())));
}

AbelianNumberField character_field(const CharacterValues& chi) {
    std::vector<Cyclotomic> distinct;
    i64 M = 1;
    for (const auto& v : chi.values)
        if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) {
            distinct.push_back(v);
            M = arith::lcm(M, v.order());
        }
    std::vector<i64> fixing;
    for (i64 u : arith::units(M))
        if (std::all_of(distinct.begin(), distinct.end(),
                        [&](const Cyclotomic& v) { return apply_galois_exponent(u, v) == v; }))
            fixing.push_back(u);
    return fixed_field(M, fixing);
}

int frobenius_schur(const CharacterValues& chi, const PresentedGroup& G) {
    const auto counts = kernels::square_census_parallel(G);
    Cyclotomic sum;
    for (Elem h = 0; h < G.order(); ++h)
        if (counts[h] != 0 && !chi(h).is_zero()) sum += chi(h) * Cyclotomic(static_cast<long>(counts[h]));
    sum *= Cyclotomic(Rational(1, static_cast<long>(G.order())));
    for (int v : {-1, 0, 1})
        if (sum == Cyclotomic(static_cast<long>(v))) return v;
    throw Error(ErrorKind::NonIntegralIndicator, "indicator is " + sum.to_string());
}

i64 local_index_at_infty_by_character(const CyclotomicAlgebra& A) {
    if (!is_real(A.F)) return 1;
    const auto G = defining_group(A);
    return frobenius_schur(induced_faithful_character(G), G) == -1 ? 2 : 1;
}

i64 local_index_at_infty_by_character(const CyclicCyclotomicAlgebra& A) {
    if (!is_real(A.F)) return 1;
    const auto G = defining_group(A);
    return frobenius_schur(induced_faithful_character(G), G) == -1 ? 2 : 1;
}

std::vector<Elem> conjugacy_key(const PresentedGroup& G, const Subgroup& S) {
    std::set<std::vector<Elem>> orbit{S.elements};
    std::vector<std::vector<Elem>> queue{S.elements};
    const auto gens = G.generators();
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (Elem s : gens) {
            std::vector<Elem> img;
            img.reserve(queue[i].size());
            for (Elem h : queue[i]) img.push_back(G.conjugate(h, s));
            std::sort(img.begin(), img.end());
            if (orbit.insert(img).second) queue.push_back(std::move(img));
        }
    return *orbit.begin();
}

DefectGroupCandidates possible_defect_groups(const PresentedGroup& G, i64 p) {
    const Subgroup all = whole_group(G);
    const Subgroup P = sylow(G, all, p);
    auto p_regular = [&](Elem g) { return G.element_order(g) % p != 0; };

    std::set<std::vector<Elem>> seen_sets, from_intersections;
    for (Elem g : all.elements) {
        if (!p_regular(g)) continue;
        Subgroup D = intersection(G, P, conjugate(G, P, g));
        if (seen_sets.insert(D.elements).second) from_intersections.insert(conjugacy_key(G, D));
    }

    std::map<std::vector<Elem>, Subgroup> from_centralizers;
    for (const auto& cls : conjugacy_classes(G)) {
        const Elem h = cls.front();
        if (!p_regular(h)) continue;
        Subgroup D = sylow(G, centralizer(G, all, closure(G, {h})), p);
        from_centralizers.emplace(conjugacy_key(G, D), std::move(D));
    }

    DefectGroupCandidates out;
    for (auto& [key, D] : from_centralizers) {
        if (!from_intersections.count(key)) continue;
        out.all_cyclic = out.all_cyclic && is_cyclic(G, D);
        out.all_abelian = out.all_abelian && is_abelian(G, D);
        out.groups.push_back(D);
    }
    return out;
}

}  // namespace schurdex
