#include "schurdex/numfields.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "schurdex/arith.hpp"
#include "schurdex/errors.hpp"

namespace schurdex {

using arith::i64;

namespace {

using Residues = std::vector<i64>;

bool contains_sorted(const Residues& s, i64 x) { return std::binary_search(s.begin(), s.end(), x); }

Residues reduce_mod(const Residues& s, i64 m) {
    std::set<i64> out;
    for (i64 b : s) out.insert(arith::mod(b, m));
    return {out.begin(), out.end()};
}

Residues intersect(const Residues& a, const Residues& b) {
    Residues out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Product set A·B mod m of two subgroups.
Residues product(const Residues& a, const Residues& b, i64 m) {
    std::set<i64> out;
    for (i64 x : a)
        for (i64 y : b) out.insert(arith::mulmod(x, y, m));
    return {out.begin(), out.end()};
}

// Powers of p modulo m (m coprime to p).
Residues cyclic_closure(i64 p, i64 m) { return arith::subgroup_closure({arith::mod(p, m)}, m); }

std::string expect_field() { return "field descriptor Q, Rationals, CF(n) or NF(n,[...])"; }

class FieldReader {
public:
    FieldReader(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

    AbelianNumberField read() {
        skip();
        AbelianNumberField F;
        if (take_word("Rationals") || take_word("Q")) {
            F = AbelianNumberField::rationals();
        } else if (take_word("CF")) {
            expect('(');
            i64 n = number();
            expect(')');
            if (n < 1) fail("positive conductor");
            F = AbelianNumberField::cyclotomic(n);
        } else if (take_word("NF")) {
            expect('(');
            i64 n = number();
            if (n < 1) fail("positive conductor");
            expect(',');
            expect('[');
            std::vector<i64> gens;
            skip();
            if (!peek(']')) {
                gens.push_back(number());
                while (take(',')) gens.push_back(number());
            }
            expect(']');
            expect(')');
            F = AbelianNumberField::fixed_field(n, gens);
        } else {
            fail(expect_field());
        }
        skip();
        if (pos_ != text_.size()) fail("end of field descriptor");
        return F;
    }

private:
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
    bool take_word(std::string_view w) {
        skip();
        if (text_.substr(pos_, w.size()) != w) return false;
        std::size_t end = pos_ + w.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
        pos_ = end;
        return true;
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
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(offset_ + pos_, what); }

    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

}  // namespace

AbelianNumberField::AbelianNumberField() = default;

AbelianNumberField::AbelianNumberField(i64 n, std::vector<i64> subgroup) {
    // Smallest m | n whose kernel {b ≡ 1 mod m} lies inside the subgroup.
    const auto units = arith::units(n);
    for (i64 m : arith::divisors(n)) {
        bool ok = true;
        for (i64 u : units)
            if (arith::mod(u, m) == arith::mod(1, m) && !contains_sorted(subgroup, u)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        conductor_ = m;
        stabilizer_ = reduce_mod(subgroup, m);
        return;
    }
}

AbelianNumberField AbelianNumberField::cyclotomic(i64 n) {
    if (n < 1) throw std::domain_error("CF: conductor must be positive");
    return AbelianNumberField(n, n == 1 ? Residues{0} : Residues{1});
}

AbelianNumberField AbelianNumberField::fixed_field(i64 n, const std::vector<i64>& gens) {
    if (n < 1) throw std::domain_error("NF: conductor must be positive");
    for (i64 g : gens)
        if (n > 1 && arith::gcd(arith::mod(g, n), n) != 1)
            throw Error(ErrorKind::NotCoprime,
                        std::to_string(g) + " is not a unit mod " + std::to_string(n));
    return AbelianNumberField(n, arith::subgroup_closure(gens, n));
}

AbelianNumberField fixed_field(i64 n, const std::vector<i64>& gens) {
    return AbelianNumberField::fixed_field(n, gens);
}

i64 AbelianNumberField::degree() const {
    return arith::euler_phi(conductor_) / static_cast<i64>(stabilizer_.size());
}

std::vector<i64> AbelianNumberField::stabilizer_mod(i64 N) const {
    if (N % conductor_ != 0)
        throw Error(ErrorKind::FieldNotContained,
                    to_string() + " is not contained in CF(" + std::to_string(N) + ")");
    if (N == 1) return {0};
    Residues out;
    for (i64 u : arith::units(N))
        if (contains_sorted(stabilizer_, arith::mod(u, conductor_))) out.push_back(u);
    return out;
}

std::string AbelianNumberField::to_string() const {
    if (conductor_ == 1) return "Q";
    if (stabilizer_.size() == 1) return "CF(" + std::to_string(conductor_) + ")";
    Residues gens;
    Residues span{1};
    for (i64 b : stabilizer_) {
        if (contains_sorted(span, b)) continue;
        gens.push_back(b);
        span = arith::subgroup_closure(gens, conductor_);
    }
    std::string s = "NF(" + std::to_string(conductor_) + ",[1";
    for (i64 g : gens) s += "," + std::to_string(g);
    return s + "])";
}

AbelianNumberField parse_field(std::string_view text, std::size_t offset) {
    return FieldReader(text, offset).read();
}

bool field_contains(const AbelianNumberField& F, const Cyclotomic& x) {
    if (x.is_rational()) return true;
    const i64 N = arith::lcm(F.conductor(), x.order());
    for (i64 b : F.stabilizer_mod(N))
        if (galois_apply(GaloisAut(N, b), x) != x) return false;
    return true;
}

bool is_real(const AbelianNumberField& F) {
    const i64 m = F.conductor();
    return m <= 2 || contains_sorted(F.stabilizer(), m - 1);
}

bool is_subfield(const AbelianNumberField& F, const AbelianNumberField& K) {
    const i64 N = arith::lcm(F.conductor(), K.conductor());
    auto bf = F.stabilizer_mod(N);
    auto bk = K.stabilizer_mod(N);
    return std::includes(bf.begin(), bf.end(), bk.begin(), bk.end());
}

AbelianNumberField compositum(const AbelianNumberField& F, const AbelianNumberField& K) {
    const i64 N = arith::lcm(F.conductor(), K.conductor());
    return AbelianNumberField::fixed_field(N, intersect(F.stabilizer_mod(N), K.stabilizer_mod(N)));
}

AbelianNumberField intersection(const AbelianNumberField& F, const AbelianNumberField& K) {
    const i64 N = arith::lcm(F.conductor(), K.conductor());
    auto gens = F.stabilizer_mod(N);
    auto more = K.stabilizer_mod(N);
    gens.insert(gens.end(), more.begin(), more.end());
    return AbelianNumberField::fixed_field(N, gens);
}

AbelianNumberField adjoin_root_of_unity(const AbelianNumberField& F, i64 n) {
    return compositum(F, AbelianNumberField::cyclotomic(n));
}

namespace {

void require_subfield(const AbelianNumberField& F, const AbelianNumberField& K) {
    if (!is_subfield(F, K))
        throw Error(ErrorKind::FieldNotContained, F.to_string() + " is not contained in " + K.to_string());
}

i64 checked_ratio(i64 num, i64 den) {
    if (den == 0 || num % den != 0)
        throw Error(ErrorKind::NonIntegralRatio,
                    std::to_string(num) + "/" + std::to_string(den) + " in a field tower");
    return num / den;
}

}  // namespace

i64 relative_degree(const AbelianNumberField& K, const AbelianNumberField& F) {
    require_subfield(F, K);
    return K.degree() / F.degree();
}

bool is_cyclic_extension(const AbelianNumberField& L, const AbelianNumberField& F) {
    require_subfield(F, L);
    const i64 N = L.conductor();
    auto bf = F.stabilizer_mod(N);
    auto bl = L.stabilizer_mod(N);
    const auto index = static_cast<i64>(bf.size() / bl.size());
    for (i64 b : bf) {
        i64 k = 1, x = b;
        while (!contains_sorted(bl, x)) {
            x = arith::mulmod(x, b, N);
            ++k;
        }
        if (k == index) return true;
    }
    return false;
}

RamificationData efg_over(const AbelianNumberField& F, i64 n, i64 p) {
    if (!arith::is_prime(p)) throw std::domain_error("efg_over: p must be prime");
    auto B = F.stabilizer_mod(n);
    const i64 np = arith::split_part(n, p).second;
    auto Bbar = reduce_mod(B, np);
    auto U = cyclic_closure(p, np);
    RamificationData r;
    r.e = static_cast<i64>(B.size() / Bbar.size());
    r.f = static_cast<i64>(intersect(U, Bbar).size());
    r.g = static_cast<i64>(Bbar.size()) / r.f;
    return r;
}

RamificationData efg_relative(const AbelianNumberField& K, const AbelianNumberField& F, i64 n, i64 p) {
    require_subfield(F, K);
    auto top_f = efg_over(F, n, p);
    auto top_k = efg_over(K, n, p);
    return {checked_ratio(top_f.e, top_k.e), checked_ratio(top_f.f, top_k.f),
            checked_ratio(top_f.g, top_k.g)};
}

RamificationData efg(const AbelianNumberField& L, const AbelianNumberField& F, i64 p) {
    return efg_relative(L, F, L.conductor(), p);
}

AbelianNumberField p_split_subextension(const AbelianNumberField& F, i64 n, i64 p) {
    return p_split_subextension(F, AbelianNumberField::cyclotomic(n), p);
}

AbelianNumberField p_split_subextension(const AbelianNumberField& F, const AbelianNumberField& L, i64 p) {
    require_subfield(F, L);
    const i64 N = L.conductor();
    const i64 np = arith::split_part(N, p).second;
    auto U = cyclic_closure(p, np);
    // Decomposition group of L/F at p, pulled back to (Z/N)*.
    Residues dec;
    for (i64 b : F.stabilizer_mod(N))
        if (contains_sorted(U, arith::mod(b, np))) dec.push_back(b);
    return AbelianNumberField::fixed_field(N, product(dec, L.stabilizer_mod(N), N));
}

i64 local_degree(const AbelianNumberField& F, const AbelianNumberField& F0, i64 p) {
    auto r = efg(F, F0, p);
    return r.e * r.f;
}

}  // namespace schurdex
