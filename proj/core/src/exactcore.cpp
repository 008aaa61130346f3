#include "chebykit/exactcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace chebykit {

// ---- IntPolynomial ----

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::from_ints(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::constant(const Int& c) { return IntPolynomial(std::vector<Int>{c}); }

IntPolynomial IntPolynomial::monomial(const Int& c, std::size_t k) {
    std::vector<Int> v(k + 1);
    v[k] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) { return *this = *this * o; }

IntPolynomial& IntPolynomial::operator*=(const Int& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
    IntPolynomial r;
    for (std::size_t i = c_.size(); i-- > 0;) {
        r = r * inner;
        r += constant(c_[i]);
    }
    return r;
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::negate_arg() const {
    IntPolynomial r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial r = constant(1), base = *this;
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

std::optional<IntPolynomial> IntPolynomial::exact_div(const IntPolynomial& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    if (is_zero()) return IntPolynomial{};
    if (degree() < d.degree()) return std::nullopt;
    std::vector<Int> rem = c_;
    std::vector<Int> q(c_.size() - d.c_.size() + 1);
    const Int& lead = d.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Int& top = rem[k + d.c_.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        Int f = top / lead;
        q[k] = f;
        for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(q));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& d) const {
    if (!d.is_monic()) throw DomainError("divmod_monic needs a monic divisor");
    if (degree() < d.degree()) return {IntPolynomial{}, *this};
    std::vector<Int> rem = c_;
    std::vector<Int> q(c_.size() - d.c_.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        Int f = rem[k + d.c_.size() - 1];
        if (f == 0) continue;
        q[k] = f;
        for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
    }
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(rem))};
}

Int IntPolynomial::eval(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Rat IntPolynomial::eval(const Rat& x) const {
    Rat r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Rat(c_[i]);
    return r;
}

double IntPolynomial::eval(double x) const {
    double r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].get_d();
    return r;
}

Complex IntPolynomial::eval(Complex x) const {
    Complex r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].get_d();
    return r;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Int& c = c_[i];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) os << a;
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

// ---- BiPolynomial ----

BiPolynomial::BiPolynomial(std::vector<std::vector<Int>> rows) : m_(std::move(rows)) { normalize(); }

void BiPolynomial::normalize() {
    std::size_t cols = 0;
    for (const auto& r : m_) cols = std::max(cols, r.size());
    for (auto& r : m_) r.resize(cols);
    // trailing zero columns
    while (cols > 0) {
        bool zero = std::all_of(m_.begin(), m_.end(), [&](const auto& r) { return r[cols - 1] == 0; });
        if (!zero) break;
        --cols;
        for (auto& r : m_) r.pop_back();
    }
    while (!m_.empty() && std::all_of(m_.back().begin(), m_.back().end(), [](const Int& c) { return c == 0; }))
        m_.pop_back();
    if (cols == 0) m_.clear();
}

BiPolynomial BiPolynomial::in_x(const IntPolynomial& p) {
    std::vector<std::vector<Int>> rows;
    for (const auto& c : p.coeffs()) rows.push_back({c});
    return BiPolynomial(std::move(rows));
}

BiPolynomial BiPolynomial::in_y(const IntPolynomial& p) { return BiPolynomial({p.coeffs()}); }

BiPolynomial BiPolynomial::constant(const Int& c) { return BiPolynomial({{c}}); }

Int BiPolynomial::coeff(std::size_t i, std::size_t j) const {
    if (i >= m_.size() || j >= m_[i].size()) return 0;
    return m_[i][j];
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
    if (o.m_.size() > m_.size()) m_.resize(o.m_.size());
    for (std::size_t i = 0; i < o.m_.size(); ++i) {
        if (o.m_[i].size() > m_[i].size()) m_[i].resize(o.m_[i].size());
        for (std::size_t j = 0; j < o.m_[i].size(); ++j) m_[i][j] += o.m_[i][j];
    }
    normalize();
    return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o) {
    if (o.m_.size() > m_.size()) m_.resize(o.m_.size());
    for (std::size_t i = 0; i < o.m_.size(); ++i) {
        if (o.m_[i].size() > m_[i].size()) m_[i].resize(o.m_[i].size());
        for (std::size_t j = 0; j < o.m_[i].size(); ++j) m_[i][j] -= o.m_[i][j];
    }
    normalize();
    return *this;
}

BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::size_t rx = a.m_.size() + b.m_.size() - 1;
    std::size_t ry = a.m_[0].size() + b.m_[0].size() - 1;
    std::vector<std::vector<Int>> r(rx, std::vector<Int>(ry));
    for (std::size_t i = 0; i < a.m_.size(); ++i)
        for (std::size_t j = 0; j < a.m_[i].size(); ++j) {
            if (a.m_[i][j] == 0) continue;
            for (std::size_t k = 0; k < b.m_.size(); ++k)
                for (std::size_t l = 0; l < b.m_[k].size(); ++l) r[i + k][j + l] += a.m_[i][j] * b.m_[k][l];
        }
    return BiPolynomial(std::move(r));
}

IntPolynomial BiPolynomial::at_y(const Int& a) const {
    std::vector<Int> out;
    for (const auto& row : m_) {
        Int s = 0;
        for (std::size_t j = row.size(); j-- > 0;) s = s * a + row[j];
        out.push_back(s);
    }
    return IntPolynomial(std::move(out));
}

Int BiPolynomial::eval(const Int& x, const Int& y) const { return at_y(y).eval(x); }

std::string BiPolynomial::to_string() const {
    if (m_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = m_.size(); i-- > 0;)
        for (std::size_t j = m_[i].size(); j-- > 0;) {
            const Int& c = m_[i][j];
            if (c == 0) continue;
            Int a = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            bool unit = (a == 1) && (i + j > 0);
            if (!unit) os << a;
            if (i >= 1) os << "x" << (i >= 2 ? "^" + std::to_string(i) : "");
            if (j >= 1) os << "y" << (j >= 2 ? "^" + std::to_string(j) : "");
        }
    return os.str();
}

// ---- ChebExpansion ----

void ChebExpansion::add(unsigned k, const Int& c) {
    if (c == 0) return;
    if (k == 0) {
        constant += 2 * c;
        return;
    }
    Int& slot = coeffs[k];
    slot += c;
    if (slot == 0) coeffs.erase(k);
}

std::string ChebExpansion::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        if (it->second != 1) os << it->second << "*";
        os << "x^(c" << it->first << ")";
    }
    if (constant != 0 || first) {
        if (!first) os << " + ";
        os << constant;
    }
    return os.str();
}

// ---- ResidueElement ----

ResidueElement::ResidueElement(Int modulus, const Int& value) : m_(std::move(modulus)) {
    if (m_ <= 0) throw DomainError("residue modulus must be positive");
    mpz_fdiv_r(v_.get_mpz_t(), value.get_mpz_t(), m_.get_mpz_t());
}

ResidueElement operator+(const ResidueElement& a, const ResidueElement& b) {
    if (a.m_ != b.m_) throw DomainError("residue moduli differ");
    return {a.m_, a.v_ + b.v_};
}

ResidueElement operator-(const ResidueElement& a, const ResidueElement& b) {
    if (a.m_ != b.m_) throw DomainError("residue moduli differ");
    return {a.m_, a.v_ - b.v_};
}

ResidueElement operator*(const ResidueElement& a, const ResidueElement& b) {
    if (a.m_ != b.m_) throw DomainError("residue moduli differ");
    return {a.m_, a.v_ * b.v_};
}

// ---- Chebyshev families ----

Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace {

IntPolynomial run_recurrence(IntPolynomial p0, IntPolynomial p1, long n) {
    if (n == 0) return p0;
    const IntPolynomial x = IntPolynomial::x();
    for (long i = 1; i < n; ++i) {
        IntPolynomial p2 = x * p1 - p0;
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return p1;
}

}  // namespace

IntPolynomial cheb_first_kind(long n) {
    n = std::labs(n);
    return run_recurrence(IntPolynomial::constant(2), IntPolynomial::x(), n);
}

IntPolynomial cheb_second_kind(long n) {
    if (n < 0) return -cheb_second_kind(-n);
    return run_recurrence(IntPolynomial{}, IntPolynomial::constant(1), n);
}

IntPolynomial u_odd_poly(long n) {
    if (n < 1 || n % 2 == 0) throw DomainError("u_odd_poly needs an odd positive index");
    IntPolynomial a = IntPolynomial::constant(1);           // U_1
    IntPolynomial b = IntPolynomial::from_ints({1, 1});     // U_3
    if (n == 1) return a;
    const IntPolynomial x = IntPolynomial::x();
    for (long k = 3; k < n; k += 2) {
        IntPolynomial c = x * b - a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

Int k_coeff(long n, long m) { return binomial(n, m) + binomial(n - 1, m - 1); }

ChebExpansion pow_to_cheb(const IntPolynomial& p) {
    ChebExpansion e;
    const auto& c = p.coeffs();
    if (!c.empty()) e.constant = c[0];
    for (std::size_t n = 1; n < c.size(); ++n) {
        if (c[n] == 0) continue;
        long ln = static_cast<long>(n);
        for (long i = 0; 2 * i < ln; ++i) e.add(static_cast<unsigned>(ln - 2 * i), c[n] * binomial(ln, i));
        if (ln % 2 == 0) e.constant += c[n] * binomial(ln, ln / 2);
    }
    return e;
}

IntPolynomial cheb_to_pow(const ChebExpansion& e) {
    std::size_t top = e.coeffs.empty() ? 0 : e.coeffs.rbegin()->first;
    std::vector<Int> out(top + 1);
    out[0] = e.constant;
    for (const auto& [n, a] : e.coeffs) {
        long ln = n;
        for (long i = 0; 2 * i <= ln; ++i) {
            Int term = a * k_coeff(ln - i, i);
            if (i % 2) term = -term;
            out[static_cast<std::size_t>(ln - 2 * i)] += term;
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial cheby_transform(const IntPolynomial& p) {
    IntPolynomial r = IntPolynomial::constant(p.coeff(0));
    for (int k = 1; k <= p.degree(); ++k)
        if (p.coeff(k) != 0) r += p.coeff(k) * cheb_first_kind(k);
    return r;
}

BiPolynomial cheby_transform(const BiPolynomial& p) {
    if (p.is_zero()) return {};
    std::vector<IntPolynomial> cx, cy;
    for (int i = 0; i <= p.deg_x(); ++i) cx.push_back(i == 0 ? IntPolynomial::constant(1) : cheb_first_kind(i));
    for (int j = 0; j <= p.deg_y(); ++j) cy.push_back(j == 0 ? IntPolynomial::constant(1) : cheb_first_kind(j));
    BiPolynomial r;
    for (int i = 0; i <= p.deg_x(); ++i)
        for (int j = 0; j <= p.deg_y(); ++j) {
            Int c = p.coeff(i, j);
            if (c == 0) continue;
            r += BiPolynomial::in_x(c * cx[i]) * BiPolynomial::in_y(cy[j]);
        }
    return r;
}

ChebExpansion cheb_mul(const ChebExpansion& a, const ChebExpansion& b) {
    ChebExpansion r;
    r.constant = a.constant * b.constant;
    for (const auto& [n, ca] : a.coeffs) r.add(n, ca * b.constant);
    for (const auto& [m, cb] : b.coeffs) r.add(m, cb * a.constant);
    for (const auto& [n, ca] : a.coeffs)
        for (const auto& [m, cb] : b.coeffs) {
            Int c = ca * cb;
            r.add(n + m, c);
            r.add(n > m ? n - m : m - n, c);
        }
    return r;
}

ResidueElement cheb_pow_ladder(const ResidueElement& x, std::uint64_t n) {
    return cheb_ladder(x, x.with_value(2), n);
}

Rat cheb_pow_ladder(const Rat& x, std::uint64_t n) { return cheb_ladder<Rat>(x, Rat(2), n); }

Int cheb_pow_ladder(const Int& x, std::uint64_t n) { return cheb_ladder<Int>(x, Int(2), n); }

Complex cheb_pow_ladder(const Complex& x, std::uint64_t n) { return cheb_ladder(x, Complex(2.0, 0.0), n); }

std::pair<IntPolynomial, IntPolynomial> fib_lucas_polys(long n) {
    if (n < 0) throw DomainError("fib_lucas_polys needs n >= 0");
    // i^{n-1} S_n(-ix): the x^j coefficient picks up i^{n-1-j}, a real sign since
    // only j of the parity of n-1 occur. Same for L_n with i^{n-j}.
    auto twist = [](const IntPolynomial& p, long shift) {
        std::vector<Int> c = p.coeffs();
        for (std::size_t j = 0; j < c.size(); ++j) {
            long e = shift - static_cast<long>(j);
            if (c[j] != 0 && ((e / 2) % 2 != 0)) c[j] = -c[j];
        }
        return IntPolynomial(std::move(c));
    };
    IntPolynomial f = twist(cheb_second_kind(n), n - 1);
    IntPolynomial l = twist(cheb_first_kind(n), n);
    return {f, l};
}

}  // namespace chebykit
