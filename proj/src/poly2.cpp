#include "pcr/poly2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <random>
#include <stdexcept>

namespace pcr {

void Poly2::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void Poly2::flip(int e) {
    std::size_t w = static_cast<std::size_t>(e) >> 6;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= std::uint64_t{1} << (e & 63);
    trim();
}

Poly2 Poly2::monomial(int e) {
    Poly2 p;
    p.flip(e);
    return p;
}

Poly2 Poly2::from_coeff_bits(const std::vector<int>& exponents) {
    Poly2 p;
    for (int e : exponents) p.flip(e);
    return p;
}

int Poly2::degree() const {
    if (words_.empty()) return -1;
    return static_cast<int>((words_.size() - 1) * 64) + std::bit_width(words_.back()) - 1;
}

int Poly2::weight() const {
    int w = 0;
    for (auto x : words_) w += std::popcount(x);
    return w;
}

bool Poly2::coeff(int e) const {
    std::size_t w = static_cast<std::size_t>(e) >> 6;
    if (w >= words_.size()) return false;
    return (words_[w] >> (e & 63)) & 1u;
}

std::vector<int> Poly2::support() const {
    std::vector<int> s;
    for (int e = 0; e <= degree(); ++e)
        if (coeff(e)) s.push_back(e);
    return s;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    if (o.words_.size() > r.words_.size()) r.words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) r.words_[i] ^= o.words_[i];
    r.trim();
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    if (is_zero() || o.is_zero()) return Poly2{};
    Poly2 r;
    r.words_.assign(words_.size() + o.words_.size(), 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t a = words_[i];
        while (a) {
            int b = std::countr_zero(a);
            a &= a - 1;
            // shift o by 64*i + b and xor in
            int sh = b;
            for (std::size_t j = 0; j < o.words_.size(); ++j) {
                r.words_[i + j] ^= o.words_[j] << sh;
                if (sh) r.words_[i + j + 1] ^= o.words_[j] >> (64 - sh);
            }
        }
    }
    r.trim();
    return r;
}

std::pair<Poly2, Poly2> Poly2::divmod(const Poly2& d) const {
    if (d.is_zero()) throw std::invalid_argument("Poly2: division by zero");
    Poly2 rem = *this;
    Poly2 quot;
    const int dd = d.degree();
    int rd = rem.degree();
    while (rd >= dd) {
        int sh = rd - dd;
        quot.flip(sh);
        // rem ^= d << sh
        std::size_t wsh = static_cast<std::size_t>(sh) >> 6;
        int bsh = sh & 63;
        if (rem.words_.size() < d.words_.size() + wsh + 1) rem.words_.resize(d.words_.size() + wsh + 1, 0);
        for (std::size_t j = 0; j < d.words_.size(); ++j) {
            rem.words_[j + wsh] ^= d.words_[j] << bsh;
            if (bsh) rem.words_[j + wsh + 1] ^= d.words_[j] >> (64 - bsh);
        }
        rem.trim();
        rd = rem.degree();
    }
    return {quot, rem};
}

bool Poly2::divides(const Poly2& f) const {
    return f.divmod(*this).second.is_zero();
}

Poly2 Poly2::square() const {
    Poly2 r;
    for (int e = 0; e <= degree(); ++e)
        if (coeff(e)) r.flip(2 * e);
    return r;
}

Poly2 Poly2::frobenius_pow(int e, const Poly2& m) const {
    Poly2 r = *this % m;
    for (int i = 0; i < e; ++i) r = r.square() % m;
    return r;
}

Poly2 Poly2::powmod(unsigned long long e, const Poly2& m) const {
    Poly2 base = *this % m;
    Poly2 r = Poly2::one() % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = base.square() % m;
        e >>= 1;
    }
    return r;
}

Poly2 poly_gcd(Poly2 a, Poly2 b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd(0, 0)");
    while (!b.is_zero()) {
        Poly2 r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;  // leading coefficient is already 1 over F2
}

Poly2 xn_minus_1(int n) {
    Poly2 p = Poly2::monomial(n);
    return p + Poly2::one();
}

std::string Poly2::to_exponent_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e : support()) {
        if (!out.empty()) out += "+";
        if (e == 0)
            out += "1";
        else if (e == 1)
            out += "x";
        else
            out += "x^" + std::to_string(e);
    }
    return out;
}

std::string Poly2::to_hex() const {
    if (is_zero()) return "0";
    static const char* digits = "0123456789abcdef";
    std::string out;
    bool leading = true;
    for (int nib = (degree() / 4); nib >= 0; --nib) {
        int v = (coeff(4 * nib) ? 1 : 0) | (coeff(4 * nib + 1) ? 2 : 0) | (coeff(4 * nib + 2) ? 4 : 0) |
                (coeff(4 * nib + 3) ? 8 : 0);
        if (v == 0 && leading) continue;
        leading = false;
        out += digits[v];
    }
    return out.empty() ? "0" : out;
}

Poly2 Poly2::parse(const std::string& text) {
    Poly2 p;
    std::size_t i = 0;
    bool any = false;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '+')) ++i;
        if (i >= text.size()) break;
        if (text[i] == '0') {
            ++i;
            any = true;
        } else if (text[i] == '1') {
            p.flip(0);
            ++i;
            any = true;
        } else if (text[i] == 'x') {
            ++i;
            int e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t start = i;
                while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == start) throw std::invalid_argument("Poly2::parse: missing exponent");
                e = std::stoi(text.substr(start, i - start));
            }
            p.flip(e);
            any = true;
        } else {
            throw std::invalid_argument("Poly2::parse: unexpected character '" + std::string(1, text[i]) + "'");
        }
    }
    if (!any) throw std::invalid_argument("Poly2::parse: empty input");
    return p;
}

Poly2 Poly2::from_hex(const std::string& hex) {
    Poly2 p;
    for (char ch : hex) {
        int v;
        if (ch >= '0' && ch <= '9')
            v = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F')
            v = ch - 'A' + 10;
        else
            throw std::invalid_argument("Poly2::from_hex: bad digit");
        // p = p * x^4 + v
        Poly2 shifted;
        for (int e = 0; e <= p.degree(); ++e)
            if (p.coeff(e)) shifted.flip(e + 4);
        for (int b = 0; b < 4; ++b)
            if ((v >> b) & 1) shifted.flip(b);
        p = shifted;
    }
    return p;
}

namespace {

bool poly_order_less(const Poly2& a, const Poly2& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int e = a.degree(); e >= 0; --e) {
        bool x = a.coeff(e), y = b.coeff(e);
        if (x != y) return y;
    }
    return false;
}

Poly2 random_poly_below(int deg, std::mt19937_64& rng) {
    Poly2 p;
    for (int e = 0; e < deg; ++e)
        if (rng() & 1) p = p + Poly2::monomial(e);
    return p;
}

// Equal-degree splitting over F2 via the trace map
// T(a) = a + a^2 + ... + a^(2^(d-1)) mod f.
void equal_degree_split(const Poly2& f, int d, std::mt19937_64& rng, std::vector<Poly2>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        Poly2 a = random_poly_below(f.degree(), rng);
        if (a.is_zero()) continue;
        Poly2 t = a % f;
        Poly2 acc = t;
        for (int i = 1; i < d; ++i) {
            t = t.square() % f;
            acc = acc + t;
        }
        Poly2 g = acc.is_zero() ? Poly2{} : poly_gcd(acc, f);
        if (!g.is_zero() && g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

Factorization factor_xn_minus_1(int n, std::uint64_t seed) {
    if (n < 1 || n > 250) throw std::invalid_argument("factor_xn_minus_1: need 1 <= n <= 250");
    int m = n, mult = 1;
    while (m % 2 == 0) {
        m /= 2;
        mult *= 2;
    }
    std::mt19937_64 rng(seed);
    std::vector<Poly2> irreducibles;

    // distinct-degree stage on the squarefree x^m - 1
    Poly2 f = xn_minus_1(m);
    Poly2 powx = Poly2::x() % f;  // x^(2^d) mod f as d advances
    for (int d = 1; !f.is_zero() && f.degree() > 0; ++d) {
        if (2 * d > f.degree()) {
            irreducibles.push_back(f);  // remainder is irreducible
            break;
        }
        powx = powx.square() % f;
        Poly2 g = poly_gcd(powx + Poly2::x(), f);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, irreducibles);
            f = f / g;
            powx = powx % f;
        }
    }

    std::sort(irreducibles.begin(), irreducibles.end(), poly_order_less);
    Factorization out;
    out.modulus_n = n;
    for (const auto& p : irreducibles) out.factors.emplace_back(p, mult);
    return out;
}

std::vector<Poly2> divisors(const Factorization& f) {
    std::vector<Poly2> divs{Poly2::one()};
    for (const auto& [fac, mult] : f.factors) {
        std::vector<Poly2> next;
        next.reserve(divs.size() * (mult + 1));
        for (const auto& d : divs) {
            Poly2 cur = d;
            for (int e = 0; e <= mult; ++e) {
                next.push_back(cur);
                if (e < mult) cur = cur * fac;
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end(), poly_order_less);
    return divs;
}

}  // namespace pcr
