#include "salem/poly.hpp"

#include <algorithm>
#include <sstream>

namespace salem {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Int(0));
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> lowest_first) {
    for (long c : lowest_first) coeffs_.emplace_back(c);
    if (coeffs_.empty()) coeffs_.push_back(Int(0));
    trim();
}

IntPolynomial IntPolynomial::monomial(int degree, Int coeff) {
    std::vector<Int> c(static_cast<size_t>(degree) + 1, Int(0));
    c.back() = std::move(coeff);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const Int& s) const {
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * s;
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::evaluate_exact(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + Rat(*it);
    }
    return acc;
}

int IntPolynomial::sign_at(const Rat& x) const {
    const Int num = x.get_num();
    const Int den = x.get_den();
    Int acc = coeffs_.back();
    for (int i = degree() - 1; i >= 0; --i) {
        acc = acc * num;
        if (coeffs_[static_cast<size_t>(i)] != 0) {
            Int dp;
            mpz_pow_ui(dp.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned>(degree() - i));
            acc += coeffs_[static_cast<size_t>(i)] * dp;
        }
    }
    return sign_of(acc);
}

Int IntPolynomial::trace() const {
    if (!is_monic()) throw NotMonicError();
    if (degree() < 1) throw Error("trace requires degree >= 1");
    return -coeffs_[static_cast<size_t>(degree() - 1)];
}

bool IntPolynomial::is_self_reciprocal() const {
    const int d = degree();
    for (int i = 0; 2 * i <= d; ++i) {
        if (coeffs_[static_cast<size_t>(i)] != coeffs_[static_cast<size_t>(d - i)]) return false;
    }
    return true;
}

IntPolynomial IntPolynomial::derivative() const {
    if (degree() == 0) return IntPolynomial();
    std::vector<Int> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Int(static_cast<long>(i));
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::canonical_key() const {
    std::string key = std::to_string(degree());
    key += '|';
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) key += ',';
        key += coeffs_[i].get_str();
    }
    return key;
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const Int& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    Int g = content();
    if (g == 0 || g == 1) return *this;
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        mpz_divexact(c[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    }
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

nlohmann::json IntPolynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& c : coeffs_) arr.push_back(c.get_str());
    return arr;
}

IntPolynomial IntPolynomial::from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw Error("polynomial JSON must be a nonempty array");
    std::vector<Int> c;
    c.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_string()) {
            c.emplace_back(e.get<std::string>());
        } else if (e.is_number_integer()) {
            c.emplace_back(static_cast<long>(e.get<int64_t>()));
        } else {
            throw Error("polynomial coefficients must be strings or integers");
        }
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial divrem_monic(const IntPolynomial& num, const IntPolynomial& den,
                           IntPolynomial& rem) {
    if (!den.is_monic()) throw NotMonicError();
    if (num.degree() < den.degree()) {
        rem = num;
        return IntPolynomial();
    }
    std::vector<Int> r = num.coeffs();
    const int dn = num.degree();
    const int dd = den.degree();
    std::vector<Int> q(static_cast<size_t>(dn - dd) + 1, Int(0));
    for (int k = dn - dd; k >= 0; --k) {
        Int c = r[static_cast<size_t>(k + dd)];
        if (c == 0) continue;
        q[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= dd; ++i) {
            r[static_cast<size_t>(k + i)] -= c * den.coeff(i);
        }
    }
    r.resize(static_cast<size_t>(std::max(dd, 1)));
    rem = IntPolynomial(std::move(r));
    return IntPolynomial(std::move(q));
}

bool divides_exactly(const IntPolynomial& div, const IntPolynomial& p) {
    if (div.is_zero()) return p.is_zero();
    if (p.degree() < div.degree()) return false;
    IntPolynomial rem;
    divrem_monic(p, div, rem);
    return rem.is_zero();
}

IntPolynomial scaled_pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g,
                                      int& scale_sign) {
    const Int& c = g.leading();
    std::vector<Int> r = f.coeffs();
    int steps = 0;
    int rdeg = f.degree();
    const int gdeg = g.degree();
    while (rdeg >= gdeg && !(rdeg == 0 && r[0] == 0)) {
        Int lead = r[static_cast<size_t>(rdeg)];
        for (int i = 0; i < rdeg; ++i) r[static_cast<size_t>(i)] *= c;
        for (int i = 0; i < gdeg; ++i) {
            r[static_cast<size_t>(rdeg - gdeg + i)] -= lead * g.coeff(i);
        }
        r[static_cast<size_t>(rdeg)] = 0;
        ++steps;
        while (rdeg > 0 && r[static_cast<size_t>(rdeg)] == 0) --rdeg;
    }
    scale_sign = (c < 0 && (steps % 2) == 1) ? -1 : 1;
    r.resize(static_cast<size_t>(rdeg) + 1);
    return IntPolynomial(std::move(r));
}

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero() && b.is_zero()) return IntPolynomial();
    Int cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    if (a.is_zero() || b.is_zero()) {
        IntPolynomial nz = a.is_zero() ? b : a;
        IntPolynomial pp = nz.primitive_part();
        if (pp.leading() < 0) pp = -pp;
        return pp * cont;
    }
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        int s;
        IntPolynomial r = scaled_pseudo_remainder(a, b, s).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.leading() < 0) a = -a;
    return a * cont;
}

int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
int sign_of(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

Rat rat_from_decimal(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    if (s.find('/') != std::string::npos) {
        Rat q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
            throw Error("malformed rational literal: " + s);
        }
        if (q.get_den() == 0) throw Error("zero denominator: " + s);
        q.canonicalize();
        return q;
    }
    std::string digits = s;
    size_t dot = digits.find('.');
    int frac_len = 0;
    if (dot != std::string::npos) {
        frac_len = static_cast<int>(digits.size() - dot - 1);
        digits.erase(dot, 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") {
        throw Error("malformed decimal literal: " + s);
    }
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i == 0 && (digits[i] == '-' || digits[i] == '+')) continue;
        if (!isdigit(static_cast<unsigned char>(digits[i]))) {
            throw Error("malformed decimal literal: " + s);
        }
    }
    Int num(digits);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned>(frac_len));
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string round_decimal_half_even(const Rat& x, int digits) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned>(digits));
    // x * 10^digits = num/den with den > 0
    Int num = x.get_num() * scale;
    const Int& den = x.get_den();
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int twice_r = r * 2;
    if (twice_r > den || (twice_r == den && mpz_odd_p(q.get_mpz_t()))) {
        q += 1;
    }
    bool neg = q < 0;
    Int a = abs(q);
    std::string body = a.get_str();
    if (static_cast<int>(body.size()) <= digits) {
        body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    }
    std::string out;
    if (neg) out += '-';
    if (digits == 0) {
        out += body;
    } else {
        out += body.substr(0, body.size() - static_cast<size_t>(digits));
        out += '.';
        out += body.substr(body.size() - static_cast<size_t>(digits));
    }
    return out;
}

}  // namespace salem
