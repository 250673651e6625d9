#include "schurdex/algebras.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "schurdex/arith.hpp"
#include "schurdex/errors.hpp"

namespace schurdex {

using arith::i64;

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorKind::InvalidPresentation, why); }

class AlgebraReader {
public:
    explicit AlgebraReader(std::string_view text) : text_(text) {}

    AlgebraPresentation read() {
        expect('[');
        i64 r = number();
        expect(',');
        auto F = field();
        AlgebraPresentation out;
        if (take(']')) {
            if (r < 1) invalid("matrix size r must be positive");
            out = MatrixAlgebra{r, F};
        } else {
            expect(',');
            i64 n = number();
            expect(',');
            expect('[');
            if (peek('[')) {
                std::vector<GeneratorTriple> gens{triple()};
                while (take(',')) gens.push_back(triple());
                expect(']');
                expect(',');
                auto tw = twists();
                expect(']');
                CyclotomicAlgebra A{r, F, n, std::move(gens), std::move(tw)};
                validate(A);
                out = std::move(A);
            } else {
                auto t = triple_body();
                expect(']');
                expect(']');
                CyclicCyclotomicAlgebra A{r, F, n, t.a, t.b, t.c};
                validate(A);
                out = A;
            }
        }
        skip();
        if (pos_ != text_.size()) fail("end of input");
        return out;
    }

private:
    AbelianNumberField field() {
        skip();
        std::size_t start = pos_;
        int depth = 0;
        while (pos_ < text_.size()) {
            char ch = text_[pos_];
            if (ch == '(' || ch == '[') ++depth;
            if (ch == ')' || ch == ']') {
                if (depth == 0) break;
                --depth;
            }
            if (ch == ',' && depth == 0) break;
            ++pos_;
        }
        if (pos_ == start) fail("field descriptor");
        return parse_field(text_.substr(start, pos_ - start), start);
    }
    GeneratorTriple triple() {
        expect('[');
        auto t = triple_body();
        expect(']');
        return t;
    }
    GeneratorTriple triple_body() {
        GeneratorTriple t;
        t.a = number();
        expect(',');
        t.b = number();
        expect(',');
        t.c = number();
        return t;
    }
    std::vector<std::vector<i64>> twists() {
        std::vector<std::vector<i64>> rows;
        expect('[');
        if (take(']')) return rows;
        do {
            expect('[');
            std::vector<i64> row;
            if (!peek(']')) {
                row.push_back(number());
                while (take(',')) row.push_back(number());
            }
            expect(']');
            rows.push_back(std::move(row));
        } while (take(','));
        expect(']');
        return rows;
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool take(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!take(c)) fail(std::string("'") + c + "'");
    }
    i64 number() {
        skip();
        i64 v = 0;
        const char* first = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
        if (ec != std::errc{} || ptr == first) fail("integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Checks one generator triple against the Galois image; returns ord(b mod n).
i64 check_triple(const GeneratorTriple& t, i64 n, const std::vector<i64>& galois, std::size_t index) {
    const std::string tag = "generator " + std::to_string(index + 1) + ": ";
    if (t.a < 1) invalid(tag + "a must be positive");
    if (n > 1 && arith::gcd(arith::mod(t.b, n), n) != 1) invalid(tag + "b is not a unit mod n");
    if (arith::powmod(t.b, t.a, n) != arith::mod(1, n)) invalid(tag + "b^a is not 1 mod n");
    if (arith::mulmod(t.c, t.b - 1, n) != 0) invalid(tag + "c(b-1) is not 0 mod n");
    const i64 b = arith::mod(t.b, n);
    if (!std::binary_search(galois.begin(), galois.end(), b))
        invalid(tag + "sigma_b does not fix the center");
    const i64 ord = arith::mult_order(b, n);
    if (ord != t.a) invalid(tag + "order of b mod n is " + std::to_string(ord) + ", not a");
    return ord;
}

void check_common(i64 r, i64 n) {
    if (r < 1) invalid("matrix size r must be positive");
    if (n < 1) invalid("n must be positive");
}

}  // namespace

std::string Place::name() const { return is_infinite() ? "infty" : std::to_string(p_); }

LocalIndexTable::LocalIndexTable(std::initializer_list<std::pair<const Place, std::int64_t>> entries) {
    for (const auto& [p, m] : entries) set(p, m);
}

void LocalIndexTable::set(Place p, i64 m) {
    if (m < 1) throw std::domain_error("local index must be positive");
    if (m == 1) entries_.erase(p);
    else entries_[p] = m;
}

i64 LocalIndexTable::at(Place p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 1 : it->second;
}

i64 LocalIndexTable::schur_index() const {
    i64 m = 1;
    for (const auto& [p, k] : entries_) m = arith::lcm(m, k);
    return m;
}

std::string LocalIndexTable::to_string() const {
    std::string s = "[";
    bool first = true;
    for (const auto& [p, m] : entries_) {
        if (!first) s += ",";
        first = false;
        s += "[" + p.name() + "," + std::to_string(m) + "]";
    }
    return s + "]";
}

std::vector<i64> galois_residues(const AbelianNumberField& F, i64 n) {
    const i64 N = arith::lcm(F.conductor(), n);
    std::set<i64> out;
    for (i64 b : F.stabilizer_mod(N)) out.insert(arith::mod(b, n));
    return {out.begin(), out.end()};
}

AbelianNumberField top_field(const AbelianNumberField& F, i64 n) { return adjoin_root_of_unity(F, n); }

void validate(const CyclicCyclotomicAlgebra& A) {
    check_common(A.r, A.n);
    auto galois = galois_residues(A.F, A.n);
    check_triple({A.a, A.b, A.c}, A.n, galois, 0);
    if (static_cast<i64>(galois.size()) != A.a) invalid("sigma_b does not generate Gal(F(zeta_n)/F)");
}

void validate(const CyclotomicAlgebra& A) {
    check_common(A.r, A.n);
    const std::size_t k = A.gens.size();
    if (k == 0) invalid("at least one generator triple is required");
    if (A.twists.size() != k - 1)
        invalid("twist list must have one row per generator but the last");
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (A.twists[i].size() != k - 1 - i)
            invalid("twist row " + std::to_string(i + 1) + " must have " + std::to_string(k - 1 - i) +
                    " entries");
    auto galois = galois_residues(A.F, A.n);
    i64 product = 1;
    std::vector<i64> bs;
    for (std::size_t i = 0; i < k; ++i) {
        product *= check_triple(A.gens[i], A.n, galois, i);
        bs.push_back(A.gens[i].b);
    }
    auto span = arith::subgroup_closure(bs, A.n);
    if (span != galois) invalid("the sigma_{b_i} do not generate Gal(F(zeta_n)/F)");
    if (product != static_cast<i64>(galois.size()))
        invalid("the cyclic groups <sigma_{b_i}> do not form a direct product");
}

AlgebraPresentation parse_algebra(std::string_view text) { return AlgebraReader(text).read(); }

std::string to_descriptor(const AlgebraPresentation& A) {
    auto triple = [](i64 a, i64 b, i64 c) {
        return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
    };
    if (auto m = std::get_if<MatrixAlgebra>(&A)) return "[" + std::to_string(m->r) + "," + m->F.to_string() + "]";
    if (auto c = std::get_if<CyclicCyclotomicAlgebra>(&A))
        return "[" + std::to_string(c->r) + "," + c->F.to_string() + "," + std::to_string(c->n) + "," +
               triple(c->a, c->b, c->c) + "]";
    if (auto g = std::get_if<CyclotomicAlgebra>(&A)) {
        std::string s = "[" + std::to_string(g->r) + "," + g->F.to_string() + "," + std::to_string(g->n) + ",[";
        for (std::size_t i = 0; i < g->gens.size(); ++i) {
            if (i) s += ",";
            s += triple(g->gens[i].a, g->gens[i].b, g->gens[i].c);
        }
        s += "],[";
        for (std::size_t i = 0; i < g->twists.size(); ++i) {
            if (i) s += ",";
            s += "[";
            for (std::size_t j = 0; j < g->twists[i].size(); ++j) {
                if (j) s += ",";
                s += std::to_string(g->twists[i][j]);
            }
            s += "]";
        }
        return s + "]]";
    }
    throw std::invalid_argument("no descriptor form for shape " + std::string(shape_name(A)));
}

std::string_view shape_name(const AlgebraPresentation& A) {
    static constexpr std::string_view names[] = {"matrix", "cyclic_cyclotomic", "cyclotomic", "cyclic",
                                                 "quaternion"};
    return names[A.index()];
}

CyclotomicAlgebra as_cyclotomic(const CyclicCyclotomicAlgebra& A) {
    return {A.r, A.F, A.n, {{A.a, A.b, A.c}}, {}};
}

CyclicCyclotomicAlgebra as_cyclic_cyclotomic(const CyclotomicAlgebra& A) {
    if (A.gens.size() != 1) throw Error(ErrorKind::WrongGeneratorCount, "expected one generator triple");
    return {A.r, A.F, A.n, A.gens[0].a, A.gens[0].b, A.gens[0].c};
}

std::string CyclicAlgebra::to_string() const {
    return "[" + K.to_string() + "," + L.to_string() + ",[" + a.to_string() + "]]";
}

CyclicAlgebra make_cyclic_algebra(const AbelianNumberField& K, const AbelianNumberField& L,
                                  const GaloisAut& sigma, const Cyclotomic& a) {
    if (!is_subfield(K, L)) invalid("center is not contained in the top field");
    if (!is_cyclic_extension(L, K)) invalid("L/K is not cyclic");
    const i64 N = L.conductor();
    if (sigma.modulus() % N != 0) invalid("sigma is not defined on L");
    if (a.is_zero() || !field_contains(K, a)) invalid("a is not a nonzero element of K");
    const i64 s = arith::mod(sigma.exponent(), N);
    auto bk = K.stabilizer_mod(N);
    auto bl = L.stabilizer_mod(N);
    if (N > 1 && !std::binary_search(bk.begin(), bk.end(), s)) invalid("sigma does not fix K");
    i64 k = 1, x = s;
    while (N > 1 && !std::binary_search(bl.begin(), bl.end(), x)) {
        x = arith::mulmod(x, s, N);
        ++k;
    }
    if (k != relative_degree(L, K)) invalid("sigma does not generate Gal(L/K)");
    return {K, L, GaloisAut(N, s), a};
}

QuaternionAlgebraQ QuaternionAlgebraQ::normalized(i64 a, i64 b) {
    if (a == 0 || b == 0) throw Error(ErrorKind::ZeroEntry, "quaternion entries must be nonzero");
    return {arith::squarefree_part(a), arith::squarefree_part(b)};
}

std::string QuaternionAlgebraQ::to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

CyclicAlgebra as_cyclic_algebra(const CyclicCyclotomicAlgebra& A) {
    const auto L = top_field(A.F, A.n);
    const i64 N = arith::lcm(L.conductor(), A.n);
    for (i64 u : A.F.stabilizer_mod(N))
        if (arith::mod(u - A.b, A.n) == 0) return make_cyclic_algebra(A.F, L, GaloisAut(N, u), cyc_root(A.n, A.c));
    invalid("sigma_b does not fix the center");
}

QuaternionAlgebraQ quadratic_to_quaternion(const CyclicAlgebra& A) {
    if (!A.K.is_rational()) throw Error(ErrorKind::CenterNotRational, "center " + A.K.to_string());
    if (A.L.degree() != 2) throw Error(ErrorKind::NotQuadratic, A.L.to_string() + " is not quadratic");
    if (!A.a.is_rational()) throw Error(ErrorKind::CenterNotRational, "a = " + A.a.to_string());
    const i64 m = A.L.conductor();
    const i64 d = arith::squarefree_part(is_real(A.L) ? m : -m);
    Rational q = A.a.rational_value();
    mpz_class t = q.get_num() * q.get_den();
    if (!t.fits_slong_p()) throw std::overflow_error("quaternion entry exceeds 64 bits");
    return QuaternionAlgebraQ::normalized(d, t.get_si());
}

CyclicCyclotomicAlgebra cyclic_to_cyclic_cyclotomic(const CyclicAlgebra& A) {
    auto root = as_root_of_unity(A.a);
    if (!root) throw Error(ErrorKind::NotCyclotomicForm, A.a.to_string() + " is not a root of unity");
    const auto [m0, k0] = *root;
    const i64 M = arith::lcm(A.L.conductor(), m0);
    for (i64 m : arith::divisors(2 * M)) {
        if (m % m0 != 0 || adjoin_root_of_unity(A.K, m) != A.L) continue;
        const i64 Ms = A.sigma.modulus();
        const i64 N = arith::lcm(Ms, m);
        i64 lift = 0;
        for (i64 u : arith::units(N))
            if (arith::mod(u, Ms) == arith::mod(A.sigma.exponent(), Ms)) {
                lift = u;
                break;
            }
        CyclicCyclotomicAlgebra out{1, A.K, m, relative_degree(A.L, A.K), arith::mod(lift, m), k0 * (m / m0) % m};
        validate(out);
        return out;
    }
    throw Error(ErrorKind::NotCyclotomicForm, A.L.to_string() + " is not " + A.K.to_string() + "(zeta_m)");
}

LocalIndexTable combine_local_indices(const LocalIndexTable& t1, const LocalIndexTable& t2) {
    for (const auto* t : {&t1, &t2})
        for (const auto& [p, m] : t->entries())
            if (m > 2)
                throw Error(ErrorKind::UnsupportedIndex,
                            "local index " + std::to_string(m) + " at " + p.name() + " exceeds 2");
    LocalIndexTable out = t1;
    for (const auto& [p, m] : t2.entries()) out.set(p, out.at(p) == 2 ? 1 : 2);
    return out;
}

}  // namespace schurdex
