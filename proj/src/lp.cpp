#include "entronet/lp.hpp"

#include <numeric>

namespace entronet::lp {

namespace {

// Scale a rational vector to the primitive integer vector on the same ray.
std::vector<Rational> make_primitive(const std::vector<Rational>& v) {
    BigInt lcm_den = 1, gcd_num = 0;
    for (const Rational& r : v) lcm_den = lcm(lcm_den, denominator(r));
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        BigInt scaled = numerator(v[i]) * (lcm_den / denominator(v[i]));
        out[i] = scaled;
        gcd_num = gcd(gcd_num, scaled);
    }
    if (gcd_num > 1)
        for (auto& r : out) r /= gcd_num;
    return out;
}

}  // namespace

ConeLpResult minimize_over_cone(const std::vector<std::vector<Rational>>& a,
                                const std::vector<Rational>& objective) {
    const std::size_t k = a.size();
    const std::size_t m = objective.size();
    for (const auto& row : a)
        if (row.size() != m) throw Error("LP row length mismatch");

    // Standard form over z = (u, w, t):  A u - A w - t = 0,  z >= 0,
    // minimizing c.u - c.w.  Initial basis: the t columns (B = -I).
    const std::size_t ncols = 2 * m + k;
    std::vector<std::vector<Rational>> tab(k, std::vector<Rational>(ncols, Rational(0)));
    std::vector<Rational> cost(ncols, Rational(0));
    std::vector<std::size_t> basis(k);

    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < m; ++j) {
            tab[r][j] = -a[r][j];  // B^{-1} = -I applied to the A block
            tab[r][m + j] = a[r][j];
        }
        tab[r][2 * m + r] = 1;
        basis[r] = 2 * m + r;
    }
    for (std::size_t j = 0; j < m; ++j) {
        cost[j] = objective[j];
        cost[m + j] = -objective[j];
    }

    ConeLpResult result;
    for (;;) {
        // Bland: entering column = lowest index with negative reduced cost.
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < ncols; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == ncols) {  // optimal; multipliers are the t reduced costs
            result.bounded = true;
            result.multipliers.resize(k);
            for (std::size_t r = 0; r < k; ++r) result.multipliers[r] = cost[2 * m + r];
            break;
        }

        // Leaving row: b = 0 throughout, so every positive entry ties at
        // ratio 0; Bland breaks the tie by smallest basic variable index.
        std::size_t leave = k;
        for (std::size_t r = 0; r < k; ++r)
            if (tab[r][enter] > 0 && (leave == k || basis[r] < basis[leave])) leave = r;

        if (leave == k) {  // unbounded: entering direction is a recession ray
            std::vector<Rational> dir(ncols, Rational(0));
            dir[enter] = 1;
            for (std::size_t r = 0; r < k; ++r) dir[basis[r]] = -tab[r][enter];
            std::vector<Rational> h(m);
            for (std::size_t j = 0; j < m; ++j) h[j] = dir[j] - dir[m + j];
            result.bounded = false;
            result.ray = make_primitive(h);
            break;
        }

        ++result.pivots;
        Rational pivot = tab[leave][enter];
        for (auto& x : tab[leave]) x /= pivot;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            Rational f = tab[r][enter];
            for (std::size_t j = 0; j < ncols; ++j) tab[r][j] -= f * tab[leave][j];
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (std::size_t j = 0; j < ncols; ++j) cost[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    // Re-verify before returning; a failure here is a defect, not an input error.
    if (result.bounded) {
        for (const Rational& y : result.multipliers)
            if (y < 0) throw Error("LP defect: negative multiplier");
        for (std::size_t j = 0; j < m; ++j) {
            Rational acc = 0;
            for (std::size_t r = 0; r < k; ++r) acc += result.multipliers[r] * a[r][j];
            if (acc != objective[j]) throw Error("LP defect: multipliers do not reconstruct the objective");
        }
    } else {
        Rational obj = 0;
        for (std::size_t j = 0; j < m; ++j) obj += objective[j] * result.ray[j];
        if (obj >= 0) throw Error("LP defect: ray does not improve the objective");
        for (std::size_t r = 0; r < k; ++r) {
            Rational acc = 0;
            for (std::size_t j = 0; j < m; ++j) acc += a[r][j] * result.ray[j];
            if (acc < 0) throw Error("LP defect: ray leaves the cone");
        }
    }
    return result;
}

}  // namespace entronet::lp
