#include "quasimap/lattice.hpp"

#include <algorithm>

#include "quasimap/errors.hpp"

namespace qm {

IntMat hnf_row_basis(IntMat a) {
    size_t rows = a.size();
    if (rows == 0) return {};
    size_t cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid the column below row r down to a single nonzero entry at r.
        for (size_t i = r + 1; i < rows; ++i) {
            while (a[i][c] != 0) {
                if (a[r][c] == 0) {
                    std::swap(a[r], a[i]);
                    continue;
                }
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
                for (size_t k = 0; k < cols; ++k) a[r][k] -= q * a[i][k];
                std::swap(a[r], a[i]);
            }
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (auto& v : a[r]) v = -v;
        ++r;
    }
    a.resize(r);
    return a;
}

std::vector<RatVec> rational_inverse(std::vector<RatVec> a) {
    size_t n = a.size();
    std::vector<RatVec> inv(n, RatVec(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw Error("rational_inverse: singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational d = a[c][c];
        for (size_t k = 0; k < n; ++k) {
            a[c][k] /= d;
            inv[c][k] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

std::vector<RatVec> rational_mat_mul(const std::vector<RatVec>& a,
                                     const std::vector<RatVec>& b) {
    size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    std::vector<RatVec> out(n, RatVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
    return out;
}

void enumerate_dual_lattice_in_box(
    const std::vector<std::vector<long long>>& generators,
    const std::vector<std::pair<Rational, Rational>>& box,
    const std::function<void(const RatVec&)>& yield) {
    size_t m = box.size();
    for (const auto& [lo, hi] : box)
        if (lo > hi) return;
    IntMat gen(generators.size());
    for (size_t i = 0; i < generators.size(); ++i)
        for (long long v : generators[i])
            gen[i].emplace_back(static_cast<long>(v));
    IntMat h = hnf_row_basis(std::move(gen));
    if (h.size() < m)
        throw UnboundedBoxError(
            "generators do not span; dual lattice is not discrete");

    std::vector<RatVec> hq(m, RatVec(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) hq[i][j] = Rational(h[i][j]);
    std::vector<RatVec> hinv = rational_inverse(hq);

    // v is a lattice point iff u := H v is integral; bound u over the box.
    std::vector<mpz_class> ulo(m), uhi(m);
    for (size_t i = 0; i < m; ++i) {
        Rational lo = 0, hi = 0;
        for (size_t j = 0; j < m; ++j) {
            const Rational& c = hq[i][j];
            if (c >= 0) {
                lo += c * box[j].first;
                hi += c * box[j].second;
            } else {
                lo += c * box[j].second;
                hi += c * box[j].first;
            }
        }
        ulo[i] = rat_ceil(lo);
        uhi[i] = rat_floor(hi);
        if (ulo[i] > uhi[i]) return;
    }

    std::vector<mpz_class> u(m);
    RatVec v(m);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == m) {
            for (size_t j = 0; j < m; ++j) {
                v[j] = 0;
                for (size_t k = 0; k < m; ++k)
                    v[j] += hinv[j][k] * Rational(u[k]);
            }
            for (size_t j = 0; j < m; ++j)
                if (v[j] < box[j].first || v[j] > box[j].second) return;
            yield(v);
            return;
        }
        for (u[i] = ulo[i]; u[i] <= uhi[i]; ++u[i]) rec(i + 1);
    };
    rec(0);
}

}  // namespace qm
