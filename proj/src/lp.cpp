#include "quasimap/lp.hpp"

#include <cstddef>

#include "quasimap/errors.hpp"

namespace qm {
namespace {

// Dense simplex tableau for  max c.x  s.t.  A x = b, x >= 0,  with b >= 0.
// Solved in two phases with artificial variables; Bland's rule throughout.
class Simplex {
  public:
    Simplex(std::vector<RatVec> a, RatVec b, RatVec c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        rows_ = a_.size();
        cols_ = c_.size();
        for (size_t r = 0; r < rows_; ++r) {
            if (b_[r] < 0) {
                b_[r] = -b_[r];
                for (auto& v : a_[r]) v = -v;
            }
        }
    }

    // Returns false when infeasible; otherwise primal optimum is reached
    // (the problems we build are always bounded).
    bool solve() {
        // Phase 1: minimize the sum of artificials.
        size_t art0 = cols_;
        for (size_t r = 0; r < rows_; ++r) {
            for (size_t rr = 0; rr < rows_; ++rr) a_[rr].push_back(rr == r ? 1 : 0);
            basis_.push_back(art0 + r);
        }
        size_t total = cols_ + rows_;
        RatVec phase1(total, 0);
        for (size_t j = art0; j < total; ++j) phase1[j] = -1;
        run(phase1, total);
        for (size_t r = 0; r < rows_; ++r) {
            if (basis_[r] >= art0 && b_[r] != 0) return false;
        }
        // Pivot leftover artificials out of the basis where possible;
        // rows that stay artificial are redundant (zero) rows.
        for (size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < art0) continue;
            for (size_t j = 0; j < cols_; ++j) {
                if (a_[r][j] != 0) {
                    pivot(r, j);
                    break;
                }
            }
        }
        // Phase 2 on the original objective, artificial columns frozen.
        RatVec phase2(total, 0);
        for (size_t j = 0; j < cols_; ++j) phase2[j] = c_[j];
        run(phase2, art0);
        return true;
    }

    RatVec solution() const {
        RatVec x(cols_, 0);
        for (size_t r = 0; r < rows_; ++r)
            if (basis_[r] < cols_) x[basis_[r]] = b_[r];
        return x;
    }

  private:
    void run(RatVec obj, size_t usable) {
        // Reduced costs: obj minus the basic rows' contributions.
        while (true) {
            RatVec reduced = obj;
            for (size_t r = 0; r < rows_; ++r) {
                const Rational& cb = obj[basis_[r]];
                if (cb == 0) continue;
                for (size_t j = 0; j < usable; ++j) reduced[j] -= cb * a_[r][j];
            }
            size_t enter = usable;
            for (size_t j = 0; j < usable; ++j) {
                if (reduced[j] > 0) {  // Bland: smallest index
                    enter = j;
                    break;
                }
            }
            if (enter == usable) return;  // optimal
            size_t leave = rows_;
            Rational best;
            for (size_t r = 0; r < rows_; ++r) {
                if (a_[r][enter] <= 0) continue;
                Rational ratio = b_[r] / a_[r][enter];
                if (leave == rows_ || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave == rows_)
                throw Error("simplex: unbounded objective (malformed program)");
            pivot(leave, enter);
        }
    }

    void pivot(size_t r, size_t j) {
        Rational inv = 1 / a_[r][j];
        for (auto& v : a_[r]) v *= inv;
        b_[r] *= inv;
        for (size_t rr = 0; rr < rows_; ++rr) {
            if (rr == r || a_[rr][j] == 0) continue;
            Rational f = a_[rr][j];
            for (size_t k = 0; k < a_[rr].size(); ++k) a_[rr][k] -= f * a_[r][k];
            b_[rr] -= f * b_[r];
        }
        basis_[r] = j;
    }

    std::vector<RatVec> a_;
    RatVec b_;
    RatVec c_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<size_t> basis_;
};

}  // namespace

std::optional<RatVec> positive_combination(const std::vector<RatVec>& cols,
                                           const RatVec& target) {
    size_t s = cols.size();
    size_t m = target.size();
    if (s == 0) {
        for (const auto& v : target)
            if (v != 0) return std::nullopt;
        return RatVec{};  // empty positive combination of nothing is 0
    }
    // Variables: a_1..a_s, t, u_1..u_s (a_i - t - u_i = 0), v (t + v = 1).
    size_t nv = s + 1 + s + 1;
    size_t t_ix = s;
    std::vector<RatVec> a;
    RatVec b;
    for (size_t i = 0; i < m; ++i) {
        RatVec row(nv, 0);
        for (size_t j = 0; j < s; ++j) row[j] = cols[j].at(i);
        a.push_back(std::move(row));
        b.push_back(target[i]);
    }
    for (size_t j = 0; j < s; ++j) {
        RatVec row(nv, 0);
        row[j] = 1;
        row[t_ix] = -1;
        row[s + 1 + j] = -1;
        a.push_back(std::move(row));
        b.push_back(0);
    }
    {
        RatVec row(nv, 0);
        row[t_ix] = 1;
        row[nv - 1] = 1;
        a.push_back(std::move(row));
        b.push_back(1);
    }
    RatVec c(nv, 0);
    c[t_ix] = 1;

    Simplex lp(std::move(a), std::move(b), std::move(c));
    if (!lp.solve()) return std::nullopt;
    RatVec x = lp.solution();
    if (x[t_ix] <= 0) return std::nullopt;
    RatVec witness(x.begin(), x.begin() + s);
    // Re-verify before returning: exact equality and strict positivity.
    for (const auto& w : witness)
        if (w <= 0) throw Error("simplex: non-positive witness escaped");
    for (size_t i = 0; i < m; ++i) {
        Rational acc = 0;
        for (size_t j = 0; j < s; ++j) acc += witness[j] * cols[j][i];
        if (acc != target[i]) throw Error("simplex: witness fails re-verification");
    }
    return witness;
}

}  // namespace qm
