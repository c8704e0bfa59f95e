#include "kron/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kron/kronecker.hpp"
#include "kron/littlewood_richardson.hpp"
#include "kron/reduced_kronecker.hpp"
#include "kron/schur_expansion.hpp"
#include "kron/stability_bounds.hpp"

namespace kron::verify {

Limits Limits::clamped(int w) const
{
    Limits l = *this;
    for (int* field : {&l.recover_max_degree, &l.oracle_max_weight, &l.attainment_max_weight,
                       &l.comparison_max_weight, &l.comparison_random_weight, &l.hook_max, &l.two_row_max,
                       &l.monotone_max_weight, &l.littlewood_max_total, &l.semigroup_max_weight})
        *field = std::min(*field, w);
    return l;
}

namespace {

std::string fmt(const Partition& p) { return format_partition(p); }

std::string triple(const Partition& a, const Partition& b, const Partition& c)
{
    return "(" + fmt(a) + "," + fmt(b) + "," + fmt(c) + ")";
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

    Partition partition(int max_weight)
    {
        const int w = static_cast<int>(below(static_cast<std::size_t>(max_weight) + 1));
        auto& list = by_weight_[w];
        if (list.empty())
            list = partitions_of(w);
        return list[below(list.size())];
    }

private:
    std::mt19937_64 engine_;
    std::map<int, std::vector<Partition>> by_weight_;
};

// Runs body, which fills detail and returns pass/fail, and times it. Any
// exception is a failure.
template <typename Body>
CheckResult timed(std::string key, std::string description, Body&& body)
{
    CheckResult r{std::move(key), std::move(description), false, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
        r.passed = body(r.detail);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

SchurExpansion expansion(std::initializer_list<std::pair<Partition, Integer>> terms)
{
    SchurExpansion f;
    for (const auto& [p, c] : terms)
        f.add_term(p, c);
    return f;
}

// --- intro -----------------------------------------------------------------

CheckResult intro_products(const Limits&, CharacterCache& cache)
{
    return timed("intro-products", "s_(k,2) * s_(k,2) for k = 2..7 matches the expected expansions, in under 10 s",
                 [&](std::string& detail) {
                     const std::vector<SchurExpansion> expected = {
                         expansion({{{4}, 1}, {{1, 1, 1, 1}, 1}, {{2, 2}, 1}}),
                         expansion({{{5}, 1},
                                    {{2, 1, 1, 1}, 1},
                                    {{3, 2}, 1},
                                    {{4, 1}, 1},
                                    {{3, 1, 1}, 1},
                                    {{2, 2, 1}, 1}}),
                         expansion({{{6}, 1},
                                    {{3, 1, 1, 1}, 1},
                                    {{4, 2}, 2},
                                    {{5, 1}, 1},
                                    {{4, 1, 1}, 1},
                                    {{3, 2, 1}, 2},
                                    {{2, 2, 2}, 1}}),
                         expansion({{{7}, 1},
                                    {{4, 1, 1, 1}, 1},
                                    {{5, 2}, 2},
                                    {{6, 1}, 1},
                                    {{5, 1, 1}, 1},
                                    {{4, 2, 1}, 2},
                                    {{3, 2, 2}, 1},
                                    {{4, 3}, 1},
                                    {{3, 3, 1}, 1}}),
                         expansion({{{8}, 1},
                                    {{5, 1, 1, 1}, 1},
                                    {{6, 2}, 2},
                                    {{7, 1}, 1},
                                    {{6, 1, 1}, 1},
                                    {{5, 2, 1}, 2},
                                    {{4, 2, 2}, 1},
                                    {{5, 3}, 1},
                                    {{4, 3, 1}, 1},
                                    {{4, 4}, 1}}),
                         expansion({{{9}, 1},
                                    {{6, 1, 1, 1}, 1},
                                    {{7, 2}, 2},
                                    {{8, 1}, 1},
                                    {{7, 1, 1}, 1},
                                    {{6, 2, 1}, 2},
                                    {{5, 2, 2}, 1},
                                    {{6, 3}, 1},
                                    {{5, 3, 1}, 1},
                                    {{5, 4}, 1}}),
                     };
                     const auto start = std::chrono::steady_clock::now();
                     for (int k = 2; k <= 7; ++k) {
                         const Partition shape{k, 2};
                         const SchurExpansion got = kronecker_product(shape, shape, cache);
                         if (got != expected[static_cast<std::size_t>(k - 2)]) {
                             detail = "k = " + std::to_string(k) + ": got " + got.to_string();
                             return false;
                         }
                     }
                     const double secs =
                         std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                     detail = "6 products match";
                     if (secs >= 10.0) {
                         detail += ", but took " + std::to_string(secs) + " s";
                         return false;
                     }
                     return true;
                 });
}

CheckResult intro_straightening(const Limits&, CharacterCache& cache)
{
    return timed("intro-straightening",
                 "stable expansion of (2),(2) lifted to n = 4 straightens to s_(2,2) * s_(2,2)",
                 [&](std::string& detail) {
                     const SchurExpansion stable = murnaghan_expansion({2}, {2}, cache).as_expansion();
                     const SchurExpansion lifted = lift_U(stable, 4);
                     const SchurExpansion direct = kronecker_product({2, 2}, {2, 2}, cache);
                     detail = "lifted: " + lifted.to_string();
                     return lifted == direct;
                 });
}

CheckResult intro_reduced_values(const Limits&, CharacterCache& cache)
{
    return timed("intro-reduced-values",
                 "gbar^(2)_(2),(2) = 2 and gbar^(4)_(2),(2) = 1 by stable evaluation and by Littlewood's sum",
                 [&](std::string& detail) {
                     const Partition two{2}, four{4};
                     const Integer a = reduced_coefficient(two, two, two, cache);
                     const Integer b = reduced_coefficient_littlewood(two, two, two, cache);
                     const Integer c = reduced_coefficient(two, two, four, cache);
                     const Integer d = reduced_coefficient_littlewood(two, two, four, cache);
                     std::ostringstream os;
                     os << "stable " << a << "," << c << "; littlewood " << b << "," << d;
                     detail = os.str();
                     return a == 2 && b == 2 && c == 1 && d == 1;
                 });
}

CheckResult intro_stab_product(const Limits&, CharacterCache& cache)
{
    return timed("intro-stab-product",
                 "stab((2),(2)) = 8 by closed form, by max |gamma|+gamma_1, and by the V-shift definition "
                 "(fails at n = 7, holds at n = 8..10)",
                 [&](std::string& detail) {
                     const Partition two{2};
                     const int formula = stab_product(two, two);
                     const int empirical = stab_product_empirical(two, two, cache);
                     const bool at7 = v_shift_holds(two, two, 7, 3, cache);
                     bool later = true;
                     for (int n = 8; n <= 10; ++n)
                         later = later && v_shift_holds(two, two, n, 3, cache);
                     detail = "formula=" + std::to_string(formula) + " empirical=" + std::to_string(empirical) +
                              " shift@7=" + (at7 ? "holds" : "fails") + " shift@8..10=" + (later ? "holds" : "fails");
                     return formula == 8 && empirical == 8 && !at7 && later;
                 });
}

CheckResult intro_saturation(const Limits&, CharacterCache& cache)
{
    return timed("saturation-counterexample", "g^(n,n)_(n,n),(n,n) is 0 for n = 1,3,5 and 1 for n = 2,4,6",
                 [&](std::string& detail) {
                     std::string values;
                     bool ok = true;
                     for (int n = 1; n <= 6; ++n) {
                         const Partition p{n, n};
                         const Integer g = kronecker_coefficient(p, p, p, cache);
                         values += (n > 1 ? "," : "") + std::to_string(g);
                         ok = ok && g == (n % 2 == 0 ? 1 : 0);
                     }
                     detail = "values " + values;
                     return ok;
                 });
}

// --- bounds ----------------------------------------------------------------

CheckResult row_bound_tables(const Limits&, CharacterCache& cache)
{
    return timed("row-bound-tables",
                 "row bounds and support maxima for (2),(4,3,2) and (3,1),(2,2) reproduce the expected tables",
                 [&](std::string& detail) {
                     struct Table {
                         Partition alpha, beta;
                         std::vector<int> maxima, bounds;
                     };
                     const Table tables[] = {
                         {{2}, {4, 3, 2}, {6, 4, 3, 2, 1}, {6, 5, 3, 2, 2}},
                         {{3, 1}, {2, 2}, {6, 3, 2, 1, 1, 1}, {6, 4, 2, 2, 1, 1}},
                     };
                     for (const auto& t : tables) {
                         const SupportTable s = murnaghan_expansion(t.alpha, t.beta, cache);
                         for (std::size_t k = 1; k <= t.maxima.size(); ++k) {
                             const int m = s.max_part(static_cast<int>(k));
                             const int b = row_bound(t.alpha, t.beta, static_cast<int>(k));
                             if (m != t.maxima[k - 1] || b != t.bounds[k - 1]) {
                                 detail = fmt(t.alpha) + "," + fmt(t.beta) + " k=" + std::to_string(k) +
                                          ": max " + std::to_string(m) + " bound " + std::to_string(b);
                                 return false;
                             }
                         }
                         if (s.max_part(static_cast<int>(t.maxima.size()) + 1) != 0) {
                             detail = "support has more rows than the table for " + fmt(t.alpha) + "," + fmt(t.beta);
                             return false;
                         }
                     }
                     detail = "both tables match";
                     return true;
                 });
}

CheckResult bound_comparison(const Limits& limits, CharacterCache&)
{
    std::ostringstream desc;
    desc << "N1 <= NB and N1 <= NV on all triples of weight <= " << limits.comparison_max_weight << " and "
         << limits.comparison_random_count << " seeded random triples of weight <= "
         << limits.comparison_random_weight;
    return timed("bound-comparison", desc.str(), [&](std::string& detail) {
        auto check = [&](const Partition& a, const Partition& b, const Partition& c) {
            const int n1 = bound_N1(a, b, c);
            if (n1 > bound_NB(a, b, c) || n1 > bound_NV(a, b, c)) {
                detail = "violated at " + triple(a, b, c);
                return false;
            }
            return true;
        };
        const auto all = partitions_up_to(limits.comparison_max_weight);
        std::size_t count = 0;
        for (const auto& a : all)
            for (const auto& b : all)
                for (const auto& c : all) {
                    if (!check(a, b, c))
                        return false;
                    ++count;
                }
        Rng rng(limits.seed);
        for (int i = 0; i < limits.comparison_random_count; ++i) {
            const Partition a = rng.partition(limits.comparison_random_weight);
            const Partition b = rng.partition(limits.comparison_random_weight);
            const Partition c = rng.partition(limits.comparison_random_weight);
            if (!check(a, b, c))
                return false;
            ++count;
        }
        detail = std::to_string(count) + " triples";
        return true;
    });
}

CheckResult bound_report_example(const Limits&, CharacterCache& cache)
{
    return timed("bound-report-example", "(3,2),(2,2,1),(2,2): (stab, N1, N2, NB, NV) = (10, 11, 10, 11, 11)",
                 [&](std::string& detail) {
                     const BoundReport r = compare_bounds({3, 2}, {2, 2, 1}, {2, 2}, cache);
                     detail = "(" + std::to_string(r.stab_empirical) + ", " + std::to_string(r.n1) + ", " +
                              std::to_string(r.n2) + ", " + std::to_string(r.nb) + ", " + std::to_string(r.nv) + ")";
                     return r.stab_empirical == 10 && r.n1 == 11 && r.n2 == 10 && r.nb == 11 && r.nv == 11 &&
                            r.consistent();
                 });
}

CheckResult bound_value_examples(const Limits&, CharacterCache&)
{
    return timed("bound-examples",
                 "(2,1),(3,1),(3,1): NB=10 N2=9; (2,1),(3,1),(3,2,2): NB=10 N2=11 NV=12; "
                 "(3,2),(3,1,1),(6): NV=13 N2=14",
                 [&](std::string& detail) {
                     const Partition a{2, 1}, b{3, 1};
                     const Partition c{3, 2}, d{3, 1, 1}, six{6}, g{3, 2, 2};
                     const int v[] = {bound_NB(a, b, b), bound_N2(a, b, b), bound_NB(a, b, g), bound_N2(a, b, g),
                                      bound_NV(a, b, g), bound_NV(c, d, six), bound_N2(c, d, six)};
                     const int want[] = {10, 9, 10, 11, 12, 13, 14};
                     std::string got;
                     for (int x : v)
                         got += (got.empty() ? "" : ",") + std::to_string(x);
                     detail = "values " + got;
                     return std::equal(std::begin(v), std::end(v), std::begin(want));
                 });
}

Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

CheckResult hook_law(const Limits& limits, CharacterCache& cache)
{
    const int m = limits.hook_max;
    return timed("hook-law",
                 "columns (1^e),(1^f),(1^d) for 1 <= d,e,f <= " + std::to_string(m) +
                     ": gbar is the triangle indicator and stab = floor((d+e+f+3)/2) when positive",
                 [&](std::string& detail) {
                     int positive = 0;
                     for (int d = 1; d <= m; ++d)
                         for (int e = 1; e <= m; ++e)
                             for (int f = 1; f <= m; ++f) {
                                 const Partition alpha = column(e), beta = column(f), gamma = column(d);
                                 const Integer g = reduced_coefficient(alpha, beta, gamma, cache);
                                 const Integer want = (e <= d + f && d <= e + f && f <= e + d) ? 1 : 0;
                                 if (g != want) {
                                     detail = "gbar = " + std::to_string(g) + " at (d,e,f) = (" +
                                              std::to_string(d) + "," + std::to_string(e) + "," +
                                              std::to_string(f) + ")";
                                     return false;
                                 }
                                 if (g == 0)
                                     continue;
                                 ++positive;
                                 const int s = stab_triple_empirical(alpha, beta, gamma, g, cache);
                                 if (s != (d + e + f + 3) / 2) {
                                     detail = "stab = " + std::to_string(s) + " at (d,e,f) = (" + std::to_string(d) +
                                              "," + std::to_string(e) + "," + std::to_string(f) + ")";
                                     return false;
                                 }
                             }
                     detail = std::to_string(m * m * m) + " triples, " + std::to_string(positive) + " positive";
                     return true;
                 });
}

CheckResult two_row_law(const Limits& limits, CharacterCache& cache)
{
    const int m = limits.two_row_max;
    return timed("two-row-law",
                 "one-row alpha, beta with parts <= " + std::to_string(m) +
                     ", every gamma in the support: stab = gamma_1 - gamma_3 + alpha_1 + beta_1",
                 [&](std::string& detail) {
                     int count = 0;
                     for (int a = 1; a <= m; ++a)
                         for (int b = 1; b <= m; ++b) {
                             const Partition alpha{a}, beta{b};
                             const SupportTable s = murnaghan_expansion(alpha, beta, cache);
                             for (const auto& [gamma, g] : s.coefficients()) {
                                 const int got = stab_triple_empirical(alpha, beta, gamma, g, cache);
                                 const int want = gamma.part(1) - gamma.part(3) + a + b;
                                 if (got != want) {
                                     detail = triple(alpha, beta, gamma) + ": stab " + std::to_string(got) +
                                              ", law gives " + std::to_string(want);
                                     return false;
                                 }
                                 ++count;
                             }
                         }
                     detail = std::to_string(count) + " triples";
                     return true;
                 });
}

// --- theorems --------------------------------------------------------------

CheckResult recovery_formula(const Limits& limits, CharacterCache& cache)
{
    const int top = limits.recover_max_degree;
    return timed("recovery-formula",
                 "alternating sum of reduced coefficients equals g^lambda_mu,nu for all triples of degree <= " +
                     std::to_string(top),
                 [&](std::string& detail) {
                     std::size_t count = 0;
                     for (int n = 0; n <= top; ++n) {
                         const auto ps = partitions_of(n);
                         for (const auto& l : ps)
                             for (const auto& m : ps)
                                 for (const auto& v : ps) {
                                     const Integer direct = kronecker_coefficient(l, m, v, cache);
                                     const Integer recovered = recover_kronecker(l, m, v, cache);
                                     if (direct != recovered) {
                                         detail = triple(l, m, v) + ": characters " + std::to_string(direct) +
                                                  ", recovered " + std::to_string(recovered);
                                         return false;
                                     }
                                     ++count;
                                 }
                     }
                     detail = std::to_string(count) + " triples";
                     return true;
                 });
}

CheckResult oracle_equivalence(const Limits& limits, CharacterCache& cache)
{
    const int w = limits.oracle_max_weight;
    return timed("reduced-oracle-equivalence",
                 "stable evaluation equals Littlewood's sum for |alpha|,|beta| <= " + std::to_string(w) +
                     " and every gamma satisfying the triangle inequalities",
                 [&](std::string& detail) {
                     const auto small = partitions_up_to(w);
                     std::size_t count = 0;
                     for (const auto& a : small)
                         for (const auto& b : small)
                             for (const auto& c : partitions_up_to(a.weight() + b.weight())) {
                                 if (!murnaghan_inequalities(a, b, c))
                                     continue;
                                 const Integer x = reduced_coefficient(a, b, c, cache);
                                 const Integer y = reduced_coefficient_littlewood(a, b, c, cache);
                                 if (x != y) {
                                     detail = triple(a, b, c) + ": stable " + std::to_string(x) + ", littlewood " +
                                              std::to_string(y);
                                     return false;
                                 }
                                 ++count;
                             }
                     detail = std::to_string(count) + " triples";
                     return true;
                 });
}

CheckResult support_attainment(const Limits& limits, CharacterCache& cache)
{
    const int w = limits.attainment_max_weight;
    return timed("support-attainment",
                 "for |alpha|,|beta| <= " + std::to_string(w) +
                     " the support (checked against Littlewood's expansion) attains max gamma_1, max |gamma|+gamma_1, max |gamma| and min |gamma| "
                     "exactly at their closed forms",
                 [&](std::string& detail) {
                     const auto small = partitions_up_to(w);
                     std::size_t count = 0;
                     for (const auto& a : small)
                         for (const auto& b : small) {
                             const SupportTable s = murnaghan_expansion(a, b, cache);
                             if (s.as_expansion() != littlewood_expansion(a, b, cache)) {
                                 detail = fmt(a) + "," + fmt(b) + ": support differs from Littlewood's expansion";
                                 return false;
                             }
                             const auto [lo, hi] = weight_range(a, b);
                             const int got[] = {s.max_part(1), s.max_weight_plus_first(), s.max_weight(),
                                                s.min_weight()};
                             const int want[] = {max_gamma1(a, b), stab_product(a, b), hi, lo};
                             if (!std::equal(std::begin(got), std::end(got), std::begin(want))) {
                                 std::ostringstream os;
                                 os << fmt(a) << "," << fmt(b) << ": got " << got[0] << "/" << got[1] << "/" << got[2]
                                    << "/" << got[3] << " want " << want[0] << "/" << want[1] << "/" << want[2] << "/"
                                    << want[3];
                                 detail = os.str();
                                 return false;
                             }
                             ++count;
                         }
                     detail = std::to_string(count) + " pairs";
                     return true;
                 });
}

CheckResult monotonicity(const Limits& limits, CharacterCache& cache)
{
    return timed("monotone-sequences",
                 std::to_string(limits.monotone_count) + " seeded random triples of weight <= " +
                     std::to_string(limits.monotone_max_weight) +
                     ": g^{gamma[n]}_{alpha[n],beta[n]} weakly increases from the first valid n to N2+3",
                 [&](std::string& detail) {
                     Rng rng(limits.seed + 1);
                     for (int i = 0; i < limits.monotone_count; ++i) {
                         const Partition a = rng.partition(limits.monotone_max_weight);
                         const Partition b = rng.partition(limits.monotone_max_weight);
                         const Partition c = rng.partition(limits.monotone_max_weight);
                         const int start = first_valid_degree(a, b, c);
                         const int stop = std::max(start, bound_N2(a, b, c) + 3);
                         Integer prev = -1;
                         for (int n = start; n <= stop; ++n) {
                             const Integer g = padded_coefficient(a, b, c, n, cache);
                             if (g < prev) {
                                 detail = triple(a, b, c) + " drops at n = " + std::to_string(n);
                                 return false;
                             }
                             prev = g;
                         }
                     }
                     detail = std::to_string(limits.monotone_count) + " sequences";
                     return true;
                 });
}

CheckResult littlewood_case(const Limits& limits, CharacterCache& cache)
{
    const int w = limits.littlewood_max_total;
    return timed("top-degree-is-lr",
                 "gbar^gamma_alpha,beta = c^gamma_alpha,beta whenever |gamma| = |alpha|+|beta| <= " +
                     std::to_string(w),
                 [&](std::string& detail) {
                     std::size_t count = 0;
                     const auto small = partitions_up_to(w);
                     for (const auto& a : small)
                         for (const auto& b : small) {
                             if (a.weight() + b.weight() > w)
                                 continue;
                             for (const auto& c : partitions_of(a.weight() + b.weight())) {
                                 const Integer x = reduced_coefficient(a, b, c, cache);
                                 const Integer y = lr_coefficient(a, b, c);
                                 if (x != y) {
                                     detail = triple(a, b, c) + ": reduced " + std::to_string(x) + ", LR " +
                                              std::to_string(y);
                                     return false;
                                 }
                                 ++count;
                             }
                         }
                     detail = std::to_string(count) + " triples";
                     return true;
                 });
}

CheckResult semigroup(const Limits& limits, CharacterCache& cache)
{
    return timed("semigroup",
                 std::to_string(limits.semigroup_count) + " seeded random pairs of support triples of weight <= " +
                     std::to_string(limits.semigroup_max_weight) + ": the componentwise sum has gbar > 0",
                 [&](std::string& detail) {
                     Rng rng(limits.seed + 2);
                     auto sample = [&] {
                         const Partition a = rng.partition(limits.semigroup_max_weight);
                         const Partition b = rng.partition(limits.semigroup_max_weight);
                         const SupportTable s = murnaghan_expansion(a, b, cache);
                         auto it = s.coefficients().begin();
                         std::advance(it, static_cast<std::ptrdiff_t>(rng.below(s.size())));
                         return std::array<Partition, 3>{a, b, it->first};
                     };
                     for (int i = 0; i < limits.semigroup_count; ++i) {
                         const auto x = sample();
                         const auto y = sample();
                         const Partition a = add(x[0], y[0]), b = add(x[1], y[1]), c = add(x[2], y[2]);
                         if (reduced_coefficient(a, b, c, cache) <= 0) {
                             detail = "sum " + triple(a, b, c) + " of " + triple(x[0], x[1], x[2]) + " and " +
                                      triple(y[0], y[1], y[2]) + " has gbar = 0";
                             return false;
                         }
                     }
                     detail = std::to_string(limits.semigroup_count) + " sums positive";
                     return true;
                 });
}

} // namespace

const std::vector<Check>& all_checks()
{
    static const std::vector<Check> checks = {
        {"intro-products", "intro", intro_products},
        {"intro-straightening", "intro", intro_straightening},
        {"intro-reduced-values", "intro", intro_reduced_values},
        {"intro-stab-product", "intro", intro_stab_product},
        {"saturation-counterexample", "intro", intro_saturation},
        {"row-bound-tables", "bounds", row_bound_tables},
        {"bound-comparison", "bounds", bound_comparison},
        {"bound-report-example", "bounds", bound_report_example},
        {"bound-examples", "bounds", bound_value_examples},
        {"hook-law", "bounds", hook_law},
        {"two-row-law", "bounds", two_row_law},
        {"recovery-formula", "theorems", recovery_formula},
        {"reduced-oracle-equivalence", "theorems", oracle_equivalence},
        {"support-attainment", "theorems", support_attainment},
        {"monotone-sequences", "theorems", monotonicity},
        {"top-degree-is-lr", "theorems", littlewood_case},
        {"semigroup", "theorems", semigroup},
    };
    return checks;
}

std::vector<std::string> suite_names() { return {"intro", "bounds", "theorems", "all"}; }

std::vector<CheckResult> run_suite(const std::string& suite, const Limits& limits, CharacterCache& cache)
{
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    std::vector<CheckResult> out;
    for (const auto& c : all_checks())
        if (suite == "all" || c.suite == suite)
            out.push_back(c.run(limits, cache));
    return out;
}

} // namespace kron::verify
