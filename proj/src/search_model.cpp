#include "salem/search_model.hpp"

#include <algorithm>
#include <cmath>

namespace salem {

namespace {

constexpr long kSeparatorDenomLog2 = 20;  // dyadic grid 2^-20
constexpr long kMinGapNumerator = 1 << 10;  // gap >= 2^-10 on that grid

}  // namespace

SearchConfig SearchConfig::standard(int d, std::uint64_t seed) {
    SearchConfig c;
    c.degree = d;
    c.trace_target = Int(2 * d - 3);
    c.right_bound = root_interval_for_degree(d);
    c.rng_seed = seed;
    return c;
}

Rat root_interval_for_degree(int d) {
    switch (d) {
        case 17: return Rat(669, 100);
        case 18: return Rat(711, 100);
        case 19: return Rat(15, 2);
        case 20: return Rat(393, 50);
        default: throw UnknownDegreeError(d);
    }
}

Rat root_interval_for_degree(int d, const std::optional<Rat>& override_bound) {
    if (override_bound) return *override_bound;
    return root_interval_for_degree(d);
}

nlohmann::json SeparatorSet::to_json() const {
    nlohmann::json j;
    nlohmann::json pts = nlohmann::json::array();
    for (const Rat& p : points) pts.push_back(rat_to_string(p));
    j["points"] = pts;
    j["signs"] = signs;
    return j;
}

SeparatorSet SeparatorSet::from_json(const nlohmann::json& j) {
    SeparatorSet s;
    for (const auto& e : j.at("points")) s.points.push_back(rat_from_decimal(e.get<std::string>()));
    s.signs = j.at("signs").get<std::vector<int>>();
    return s;
}

nlohmann::json CoefficientBounds::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < lo.size(); ++i) {
        arr.push_back({{"index", i}, {"lo", lo[i].get_str()}, {"hi", hi[i].get_str()}});
    }
    return arr;
}

CoefficientBounds estimate_coefficient_bounds(const SearchConfig& config, Rng& rng) {
    const int d = config.degree;
    if (d < 2) throw Error("bound estimation requires degree >= 2");
    const size_t nfree = static_cast<size_t>(d - 1);

    if (config.bound_box_override) {
        CoefficientBounds b;
        b.lo.assign(nfree, Int(-*config.bound_box_override));
        b.hi.assign(nfree, Int(*config.bound_box_override));
        // a_0 keeps the sign forced by the root layout
        if (d % 2 == 0) {
            b.lo[0] = 1;
        } else {
            b.hi[0] = -1;
        }
        return b;
    }

    const double R = mpq_get_d(config.right_bound.get_mpq_t());
    const double trace = config.trace_target.get_d();
    const long trials = std::max(config.bound_trials, 1L);

    std::vector<double> mn(nfree, 0.0), mx(nfree, 0.0);
    double tolerance = 0.5;
    for (int attempt = 0; attempt < 6; ++attempt) {
        std::fill(mn.begin(), mn.end(), 0.0);
        std::fill(mx.begin(), mx.end(), 0.0);
        long accepted = 0;
        std::vector<double> roots(static_cast<size_t>(d));
        std::vector<double> poly(static_cast<size_t>(d) + 1);
        for (long t = 0; t < trials; ++t) {
            double sum = 0;
            for (int i = 0; i < d - 1; ++i) {
                roots[static_cast<size_t>(i)] = rng.uniform(0.0, 4.0);
                sum += roots[static_cast<size_t>(i)];
            }
            roots[static_cast<size_t>(d - 1)] = rng.uniform(4.0, R);
            sum += roots[static_cast<size_t>(d - 1)];
            if (std::abs(sum - trace) > tolerance) continue;

            // expand prod (z - r_i)
            poly.assign(static_cast<size_t>(d) + 1, 0.0);
            poly[0] = 1.0;
            int deg = 0;
            for (int i = 0; i < d; ++i) {
                ++deg;
                for (int k = deg; k >= 1; --k) {
                    poly[static_cast<size_t>(k)] =
                        poly[static_cast<size_t>(k - 1)] -
                        roots[static_cast<size_t>(i)] * poly[static_cast<size_t>(k)];
                }
                poly[0] = -roots[static_cast<size_t>(i)] * poly[0];
            }
            // poly[k] is the coefficient of z^k, so a_i tracks poly[i]
            if (accepted == 0) {
                for (size_t i = 0; i < nfree; ++i) {
                    mn[i] = mx[i] = poly[i];
                }
            } else {
                for (size_t i = 0; i < nfree; ++i) {
                    mn[i] = std::min(mn[i], poly[i]);
                    mx[i] = std::max(mx[i], poly[i]);
                }
            }
            ++accepted;
        }
        if (accepted >= std::max(1L, trials / 100)) {
            CoefficientBounds b;
            b.lo.resize(nfree);
            b.hi.resize(nfree);
            for (size_t i = 0; i < nfree; ++i) {
                const double mid = (mn[i] + mx[i]) / 2;
                const double half = (mx[i] - mn[i]) / 2;
                const double widened =
                    half * config.bound_inflation_mult +
                    static_cast<double>(config.bound_inflation_add);
                b.lo[i] = Int(std::floor(mid - widened));
                b.hi[i] = Int(std::ceil(mid + widened));
            }
            // Q(0) has sign (-1)^d, so a_0 never straddles zero.
            if (d % 2 == 0) {
                if (b.lo[0] < 1) b.lo[0] = 1;
                if (b.hi[0] < 1) b.hi[0] = 1;
            } else {
                if (b.hi[0] > -1) b.hi[0] = -1;
                if (b.lo[0] > -1) b.lo[0] = -1;
            }
            return b;
        }
        tolerance *= 2;
    }
    throw InsufficientSamplesError();
}

SeparatorSet draw_separators(const SearchConfig& config, Rng& rng) {
    const int d = config.degree;
    if (d < 2) throw Error("separator drawing requires degree >= 2");
    const long denom_log2 = kSeparatorDenomLog2;
    const std::uint64_t grid = std::uint64_t{4} << denom_log2;  // numerator of 4

    std::vector<std::uint64_t> interior(static_cast<size_t>(d - 2));
    for (;;) {
        for (auto& v : interior) v = 1 + rng.below(grid - 1);
        std::sort(interior.begin(), interior.end());
        bool ok = true;
        std::uint64_t prev = 0;
        for (std::uint64_t v : interior) {
            if (v - prev < kMinGapNumerator) {
                ok = false;
                break;
            }
            prev = v;
        }
        if (ok && grid - prev < static_cast<std::uint64_t>(kMinGapNumerator)) ok = false;
        if (ok) break;
    }

    SeparatorSet s;
    s.points.reserve(static_cast<size_t>(d) + 1);
    s.points.emplace_back(0);
    Int den = Int(1) << denom_log2;
    for (std::uint64_t v : interior) {
        Rat q(Int(static_cast<unsigned long>(v)), den);
        q.canonicalize();
        s.points.push_back(q);
    }
    s.points.emplace_back(4);
    s.points.push_back(config.right_bound);

    s.signs.resize(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        s.signs[static_cast<size_t>(j)] = ((d - j) % 2 == 0) ? 1 : -1;
    }
    return s;
}

FeasibilityProblem build_feasibility_problem(const SeparatorSet& separators,
                                             const CoefficientBounds& bounds,
                                             const SearchConfig& config) {
    const int d = config.degree;
    const size_t nfree = static_cast<size_t>(d - 1);
    if (separators.points.size() != static_cast<size_t>(d) + 1) {
        throw Error("separator count does not match degree");
    }
    if (bounds.size() != nfree) throw Error("bound count does not match degree");

    FeasibilityProblem prob;
    prob.degree = d;
    prob.trace_target = config.trace_target;
    prob.lp_margin = config.lp_margin;
    prob.bounds = bounds;
    prob.separators = separators;

    for (size_t j = 0; j < separators.points.size(); ++j) {
        const Rat& s = separators.points[j];
        const int sigma = separators.signs[j];
        const Int& num = s.get_num();
        const Int& den = s.get_den();

        // denominator powers den^(d-i)
        std::vector<Int> den_pow(static_cast<size_t>(d) + 1);
        den_pow[static_cast<size_t>(d)] = 1;
        for (int i = d - 1; i >= 0; --i) {
            den_pow[static_cast<size_t>(i)] = den_pow[static_cast<size_t>(i + 1)] * den;
        }
        // numerator powers num^i
        std::vector<Int> num_pow(static_cast<size_t>(d) + 1);
        num_pow[0] = 1;
        for (int i = 1; i <= d; ++i) num_pow[static_cast<size_t>(i)] = num_pow[static_cast<size_t>(i - 1)] * num;

        FeasibilityProblem::ExactRow row;
        row.coeff.resize(nfree);
        for (size_t i = 0; i < nfree; ++i) {
            row.coeff[i] = num_pow[i] * den_pow[i];
            if (sigma < 0) row.coeff[i] = -row.coeff[i];
        }
        row.constant = num_pow[static_cast<size_t>(d)] -
                       config.trace_target * num_pow[static_cast<size_t>(d - 1)] * den;
        if (sigma < 0) row.constant = -row.constant;
        prob.exact_rows.push_back(std::move(row));

        // float twin built from the point value directly; same geometry,
        // tamer magnitudes than the cleared-denominator form
        const double sv = mpq_get_d(s.get_mpq_t());
        FeasibilityProblem::FloatRow frow;
        frow.coeff.resize(nfree);
        double pw = 1.0;
        for (size_t i = 0; i < nfree; ++i) {
            frow.coeff[i] = sigma * pw;
            pw *= sv;
        }
        const double trace = config.trace_target.get_d();
        frow.offset = sigma * (std::pow(sv, d) - trace * std::pow(sv, d - 1));
        double norm = std::abs(frow.offset);
        for (double c : frow.coeff) norm = std::max(norm, std::abs(c));
        if (norm == 0) norm = 1;
        for (double& c : frow.coeff) c /= norm;
        frow.offset /= norm;
        prob.float_rows.push_back(std::move(frow));
    }
    return prob;
}

bool FeasibilityProblem::exact_check(const std::vector<Int>& a) const {
    if (a.size() != static_cast<size_t>(degree - 1)) return false;
    for (const ExactRow& row : exact_rows) {
        Int value = row.constant;
        for (size_t i = 0; i < a.size(); ++i) value += row.coeff[i] * a[i];
        if (value < 1) return false;
    }
    return true;
}

IntPolynomial assemble_candidate(const FeasibilityProblem& problem,
                                 const std::vector<Int>& a) {
    const int d = problem.degree;
    std::vector<Int> c(static_cast<size_t>(d) + 1);
    for (size_t i = 0; i + 1 < static_cast<size_t>(d); ++i) c[i] = a[i];
    c[static_cast<size_t>(d - 1)] = -problem.trace_target;
    c[static_cast<size_t>(d)] = 1;
    return IntPolynomial(std::move(c));
}

}  // namespace salem
