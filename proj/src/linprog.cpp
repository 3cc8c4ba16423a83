#include "gmak/linprog.hpp"

#include <stdexcept>

namespace gmak {

namespace {

// Dense tableau simplex. Variables are laid out as
//   [u_0..u_{n-1} | v_0..v_{n-1} | slack per inequality | artificial per row]
// with x_j = u_j - v_j; all tableau variables are nonnegative.
class Tableau {
public:
    Tableau(int nvars, const std::vector<LinearConstraint>& cons) : n_(nvars), m_(static_cast<int>(cons.size())) {
        int nslack = 0;
        for (const auto& c : cons)
            if (c.rel != Rel::eq) ++nslack;
        slack0_ = 2 * n_;
        art0_ = slack0_ + nslack;
        ncols_ = art0_ + m_;
        rows_.assign(m_, std::vector<Rational>(ncols_ + 1));
        basis_.assign(m_, -1);

        int si = 0;
        for (int i = 0; i < m_; ++i) {
            const auto& c = cons[i];
            if (static_cast<int>(c.a.size()) != n_)
                throw std::invalid_argument("constraint length mismatch");
            int flip = 1;
            Rational rhs = c.b;
            Rel rel = c.rel;
            if (rhs < 0) {  // keep rhs nonnegative
                flip = -1;
                rhs = -rhs;
                if (rel == Rel::ge)
                    rel = Rel::le;
                else if (rel == Rel::le)
                    rel = Rel::ge;
            }
            auto& row = rows_[i];
            for (int j = 0; j < n_; ++j) {
                row[j] = flip * c.a[j];
                row[n_ + j] = -row[j];
            }
            if (rel == Rel::le)
                row[slack0_ + si++] = 1;
            else if (rel == Rel::ge)
                row[slack0_ + si++] = -1;
            row[art0_ + i] = 1;
            row[ncols_] = rhs;
            basis_[i] = art0_ + i;
        }
        obj_.assign(ncols_ + 1, Rational(0));
    }

    // Phase I: drive sum of artificials to zero. Returns false if infeasible.
    bool phase1() {
        for (int j = art0_; j < ncols_; ++j) obj_[j] = 1;
        canonicalize_objective();
        run();
        if (obj_[ncols_] != 0) return false;  // stored value is -objective
        // pivot any zero-valued artificial out of the basis where possible
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < art0_) continue;
            for (int j = 0; j < art0_; ++j)
                if (rows_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
        }
        blocked_ = true;  // artificials never re-enter
        return true;
    }

    // Phase II with costs on the original free variables.
    void phase2(const std::vector<Rational>& cost) {
        std::fill(obj_.begin(), obj_.end(), Rational(0));
        for (int j = 0; j < n_; ++j) {
            obj_[j] = cost[j];
            obj_[n_ + j] = -cost[j];
        }
        canonicalize_objective();
        run();
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> val(ncols_);
        for (int i = 0; i < m_; ++i) val[basis_[i]] = rows_[i][ncols_];
        std::vector<Rational> x(n_);
        for (int j = 0; j < n_; ++j) x[j] = val[j] - val[n_ + j];
        return x;
    }

private:
    void canonicalize_objective() {
        obj_[ncols_] = 0;
        for (int i = 0; i < m_; ++i) {
            const Rational& c = obj_[basis_[i]];
            if (c == 0) continue;
            Rational f = c;
            for (int j = 0; j <= ncols_; ++j) obj_[j] -= f * rows_[i][j];
        }
    }

    void pivot(int r, int c) {
        Rational p = rows_[r][c];
        for (int j = 0; j <= ncols_; ++j) rows_[r][j] /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            Rational f = rows_[i][c];
            for (int j = 0; j <= ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
        }
        if (obj_[c] != 0) {
            Rational f = obj_[c];
            for (int j = 0; j <= ncols_; ++j) obj_[j] -= f * rows_[r][j];
        }
        basis_[r] = c;
    }

    // Bland's rule: smallest-index entering column, smallest basis index on ties.
    void run() {
        int limit = blocked_ ? art0_ : ncols_;
        while (true) {
            int enter = -1;
            for (int j = 0; j < limit; ++j)
                if (obj_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == -1) return;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rows_[i][ncols_] / rows_[i][enter];
                if (leave == -1 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == -1) throw std::runtime_error("linear program unbounded");
            pivot(leave, enter);
        }
    }

    int n_, m_, slack0_ = 0, art0_ = 0, ncols_ = 0;
    bool blocked_ = false;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> obj_;
    std::vector<int> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> lp_feasible_point(int nvars, const std::vector<LinearConstraint>& cons) {
    Tableau t(nvars, cons);
    if (!t.phase1()) return std::nullopt;
    return t.solution();
}

std::optional<std::vector<Rational>> lp_minimize(int nvars, const std::vector<Rational>& cost,
                                                 const std::vector<LinearConstraint>& cons) {
    if (static_cast<int>(cost.size()) != nvars) throw std::invalid_argument("cost length mismatch");
    Tableau t(nvars, cons);
    if (!t.phase1()) return std::nullopt;
    t.phase2(cost);
    return t.solution();
}

}  // namespace gmak
