#include "salem/roots.hpp"

#include <algorithm>

#include "salem/transform.hpp"

namespace salem {

namespace {

int count_variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

SturmChain sturm_chain(const IntPolynomial& p) {
    if (p.degree() < 1) throw Error("sturm chain requires degree >= 1");
    SturmChain sc;
    sc.chain.push_back(p.primitive_part());
    sc.chain.push_back(p.derivative().primitive_part());
    while (!sc.chain.back().is_zero() && sc.chain.back().degree() > 0) {
        const IntPolynomial& a = sc.chain[sc.chain.size() - 2];
        const IntPolynomial& b = sc.chain.back();
        int s;
        IntPolynomial r = scaled_pseudo_remainder(a, b, s);
        if (r.is_zero()) break;
        // next element is -(a mod b) up to a positive factor
        if (s > 0) r = -r;
        sc.chain.push_back(r.primitive_part());
    }
    return sc;
}

int SturmChain::variations_at(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const IntPolynomial& q : chain) signs.push_back(q.sign_at(x));
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const IntPolynomial& q : chain) signs.push_back(sign_of(q.leading()));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const IntPolynomial& q : chain) {
        int s = sign_of(q.leading());
        if (q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int count_roots_open(const IntPolynomial& p, const Rat& a, const Rat& b) {
    if (!(a < b)) throw Error("count_roots_open requires a < b");
    if (p.sign_at(a) == 0 || p.sign_at(b) == 0) throw EndpointIsRootError();
    SturmChain sc = sturm_chain(p);
    return sc.variations_at(a) - sc.variations_at(b);
}

int count_real_roots(const IntPolynomial& p) {
    SturmChain sc = sturm_chain(p);
    return sc.variations_at_neg_inf() - sc.variations_at_pos_inf();
}

ProfileCheck certify_profile(const IntPolynomial& Q, const Rat& R) {
    ProfileCheck out;
    const int d = Q.degree();
    if (!Q.is_monic()) {
        out.violation = "not monic";
        return out;
    }
    if (d < 2) {
        out.violation = "degree below 2";
        return out;
    }
    if (!(R > 4)) {
        out.violation = "right bound must exceed 4";
        return out;
    }
    SturmChain sc = sturm_chain(Q);
    if (!sc.squarefree_input()) {
        out.violation = "not squarefree";
        return out;
    }
    const Rat zero(0), four(4);
    const int s0 = Q.sign_at(zero);
    const int s4 = Q.sign_at(four);
    const int sR = Q.sign_at(R);
    if (s0 == 0) {
        out.violation = "root at 0";
        return out;
    }
    if (s4 == 0) {
        out.violation = "root at 4";
        return out;
    }
    if (sR == 0) {
        out.violation = "root at right bound";
        return out;
    }
    const int v0 = sc.variations_at(zero);
    const int v4 = sc.variations_at(four);
    const int vR = sc.variations_at(R);
    const int in_0_4 = v0 - v4;
    const int in_4_R = v4 - vR;
    if (in_0_4 != d - 1) {
        out.violation = "expected " + std::to_string(d - 1) + " roots in (0,4), found " +
                        std::to_string(in_0_4);
        return out;
    }
    if (in_4_R != 1) {
        out.violation = "expected 1 root in (4,R), found " + std::to_string(in_4_R);
        return out;
    }
    const int total = sc.variations_at_neg_inf() - sc.variations_at_pos_inf();
    if (total != d) {
        out.violation = "expected " + std::to_string(d) + " real roots, found " +
                        std::to_string(total);
        return out;
    }

    // Shrink (4, R) until the lower end moves strictly above 4.
    Rat lo = four, hi = R;
    while (lo == four) {
        Rat mid = (lo + hi) / 2;
        int sm = Q.sign_at(mid);
        if (sm == 0) {
            // the isolated root is exactly mid; bracket it symmetrically
            lo = (four + mid) / 2;
            hi = (mid + R) / 2;
            break;
        }
        if (sm == s4) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    out.ok = true;
    out.profile.count_in_0_4 = in_0_4;
    out.profile.count_above_4 = in_4_R;
    out.profile.isolator_lo = lo;
    out.profile.isolator_hi = hi;
    return out;
}

namespace {

// One bisection pass: narrow (lo, hi) until hi - lo < 10^-target_exp or the
// root is hit exactly (returned through exact_root).
void bisect_to_width(const IntPolynomial& p, Rat& lo, Rat& hi, int target_exp,
                     bool& exact, Rat& exact_root) {
    Rat width_bound(Int(1));
    {
        Int den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned>(target_exp));
        width_bound = Rat(Int(1), den);
    }
    int slo = p.sign_at(lo);
    if (slo == 0) {
        exact = true;
        exact_root = lo;
        return;
    }
    while (hi - lo >= width_bound) {
        Rat mid = (lo + hi) / 2;
        int sm = p.sign_at(mid);
        if (sm == 0) {
            exact = true;
            exact_root = mid;
            return;
        }
        if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    exact = false;
}

}  // namespace

std::string refine_largest_root(const IntPolynomial& p, Rat lo, Rat hi, int digits) {
    if (!(lo < hi)) throw Error("refine requires lo < hi");
    if (digits < 0) throw Error("digits must be nonnegative");
    // Width < 10^-(digits+2) guarantees correct rounding unless the root sits
    // within the guard band of a rounding boundary; widen precision then.
    for (int extra = 0; extra <= 40; extra += 4) {
        bool exact = false;
        Rat root;
        bisect_to_width(p, lo, hi, digits + 2 + extra, exact, root);
        if (exact) return round_decimal_half_even(root, digits);
        std::string a = round_decimal_half_even(lo, digits);
        std::string b = round_decimal_half_even(hi, digits);
        if (a == b) return a;
    }
    return round_decimal_half_even((lo + hi) / 2, digits);
}

std::string salem_from_z(const Rat& z_lo, const Rat& z_hi, const IntPolynomial& Q,
                         int digits) {
    if (!(z_lo > 4)) throw Error("z isolator must lie above 4");
    IntPolynomial P = expand_to_salem(Q);
    // lambda + 1/lambda = z - 2 with lambda > 1 pins lambda between z-3 and z-2
    Rat lo = z_lo - 3;
    if (lo < 1) lo = Rat(1);
    Rat hi = z_hi - 2;
    return refine_largest_root(P, lo, hi, digits);
}

}  // namespace salem
