#include "gmak/signspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>

#include "gmak/errors.hpp"
#include "gmak/linprog.hpp"

namespace gmak {

int enumeration_limit() {
    static int limit = [] {
        if (const char* env = std::getenv("GMAK_ENUM_LIMIT")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 14;
    }();
    return limit;
}

namespace {

void check_limit(int n) {
    if (n > enumeration_limit())
        throw EnumerationLimitError("sign-vector enumeration limit exceeded: n = " + std::to_string(n) +
                                    " > " + std::to_string(enumeration_limit()));
}

// strictly increasing index tuples of a fixed size
bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

int8_t sign_det(RationalMatrix m) {
    int n = m.rows();
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot == -1) return 0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            sign = -sign;
        }
        if (m.at(col, col) < 0) sign = -sign;
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col) == 0) continue;
            Rational f = m.at(i, col) / m.at(col, col);
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return static_cast<int8_t>(sign);
}

// cocircuits of the row configuration of B: for every rank-(d-1) row tuple,
// the sign vector of B lambda with lambda spanning the tuple's kernel
std::vector<SignVector> cocircuits(const SubspaceBasis& b) {
    const int n = b.ambient_dim();
    const int d = b.dim();
    SignVectorSet found;
    std::vector<int> tuple(d - 1);
    for (int i = 0; i < d - 1; ++i) tuple[i] = i;
    bool more = d - 1 <= n;
    while (more) {
        RationalMatrix sub(d - 1, d);
        for (int i = 0; i < d - 1; ++i)
            for (int j = 0; j < d; ++j) sub.at(i, j) = b.basis().at(tuple[i], j);
        SubspaceBasis ker = kernel_basis(sub);
        if (ker.dim() == 1) {
            std::vector<Rational> x = b.basis() * ker.column(0);
            SignVector sv = SignVector::of(x);
            if (!sv.is_zero()) {
                found.insert(sv);
                found.insert(sv.negated());
            }
        }
        more = next_combination(tuple, n);
        if (d - 1 == 0) break;  // single empty tuple
    }
    return {found.begin(), found.end()};
}

}  // namespace

SignVectorSet enumerate_sign_vectors(const SubspaceBasis& b) {
    check_limit(b.ambient_dim());
    SignVectorSet out;
    out.insert(SignVector::zero(b.ambient_dim()));
    if (b.dim() == 0) return out;

    auto cocs = cocircuits(b);
    std::deque<SignVector> queue(cocs.begin(), cocs.end());
    out.insert(cocs.begin(), cocs.end());
    while (!queue.empty()) {
        SignVector x = queue.front();
        queue.pop_front();
        for (const auto& y : cocs) {
            SignVector z = x.composed(y);
            if (out.insert(z).second) queue.push_back(z);
        }
    }
    return out;
}

std::optional<std::vector<Rational>> realization_in_subspace(const SubspaceBasis& b, const SignVector& tau) {
    if (tau.size() != b.ambient_dim()) throw std::invalid_argument("sign vector length mismatch");
    const int d = b.dim();
    std::vector<LinearConstraint> cons;
    for (int k = 0; k < b.ambient_dim(); ++k) {
        LinearConstraint c;
        c.a = b.row(k);
        if (tau[k] == 0) {
            c.rel = Rel::eq;
            c.b = 0;
        } else if (tau[k] > 0) {
            c.rel = Rel::ge;
            c.b = 1;
        } else {
            c.rel = Rel::le;
            c.b = -1;
        }
        cons.push_back(std::move(c));
    }
    auto lambda = lp_feasible_point(d, cons);
    if (!lambda) return std::nullopt;
    return b.basis() * *lambda;
}

SignVectorSet enumerate_sign_vectors_candidates(const SubspaceBasis& b) {
    check_limit(b.ambient_dim());
    const int n = b.ambient_dim();
    SignVectorSet out;
    std::vector<int8_t> cand(n, -1);
    while (true) {
        SignVector tau{std::vector<int8_t>(cand)};
        // prune: rows forced to zero must not carry a nonzero sign
        std::vector<std::vector<Rational>> zero_rows;
        for (int k = 0; k < n; ++k)
            if (tau[k] == 0) zero_rows.push_back(b.row(k));
        bool pruned = false;
        if (!zero_rows.empty()) {
            RationalMatrix z = RationalMatrix::from_columns(b.dim(), zero_rows).transposed();
            int rz = rank(z);
            for (int k = 0; k < n && !pruned; ++k) {
                if (tau[k] == 0) continue;
                auto rows = zero_rows;
                rows.push_back(b.row(k));
                RationalMatrix z2 = RationalMatrix::from_columns(b.dim(), rows).transposed();
                if (rank(z2) == rz) pruned = true;  // row in span of zero set
            }
        }
        if (!pruned && realization_in_subspace(b, tau)) out.insert(tau);

        int i = 0;
        for (; i < n; ++i) {
            if (cand[i] < 1) {
                ++cand[i];
                break;
            }
            cand[i] = -1;
        }
        if (i == n) break;
    }
    return out;
}

Chirotope::Chirotope(int n, int d, std::vector<int8_t> signs) : n_(n), d_(d), signs_(std::move(signs)) {
    binom_.assign(n + 1, std::vector<long long>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom_[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom_[i][j] = binom_[i - 1][j - 1] + (j <= i - 1 ? binom_[i - 1][j] : 0);
    }
}

int8_t Chirotope::sign_of_sorted(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != d_) throw std::invalid_argument("chirotope tuple size");
    long long r = 0;
    int prev = -1;
    for (int i = 0; i < d_; ++i) {
        for (int v = prev + 1; v < tuple[i]; ++v) r += binom_[n_ - 1 - v][d_ - 1 - i];
        prev = tuple[i];
    }
    return signs_[static_cast<size_t>(r)];
}

int8_t Chirotope::sign_of(std::vector<int> tuple) const {
    int parity = 1;
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j) {
            if (tuple[i] == tuple[j]) return 0;
            if (tuple[i] > tuple[j]) parity = -parity;
        }
    std::sort(tuple.begin(), tuple.end());
    return static_cast<int8_t>(parity * sign_of_sorted(tuple));
}

Chirotope chirotope_of(const SubspaceBasis& b) {
    const int n = b.ambient_dim();
    const int d = b.dim();
    std::vector<int8_t> signs;
    if (d == 0) {
        signs.push_back(1);  // det of the empty matrix
        return Chirotope(n, 0, std::move(signs));
    }
    std::vector<int> tuple(d);
    for (int i = 0; i < d; ++i) tuple[i] = i;
    if (d > n) throw std::invalid_argument("chirotope: d > n");
    do {
        RationalMatrix sub(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) sub.at(i, j) = b.basis().at(tuple[i], j);
        signs.push_back(sign_det(std::move(sub)));
    } while (next_combination(tuple, n));
    return Chirotope(n, d, std::move(signs));
}

bool sign_sets_equal(const SubspaceBasis& b1, const SubspaceBasis& b2) {
    if (b1.ambient_dim() != b2.ambient_dim())
        throw std::invalid_argument("sign_sets_equal: ambient dimension mismatch");
    bool verdict;
    if (b1.dim() != b2.dim()) {
        verdict = false;  // equal sign sets force equal dimensions
    } else if (b1.dim() == 0) {
        verdict = true;
    } else {
        Chirotope c1 = chirotope_of(b1);
        Chirotope c2 = chirotope_of(b2);
        const auto& s1 = c1.raw();
        const auto& s2 = c2.raw();
        int flip = 0;
        verdict = true;
        for (size_t i = 0; i < s1.size(); ++i) {
            if ((s1[i] == 0) != (s2[i] == 0)) {
                verdict = false;
                break;
            }
            if (s1[i] != 0 && flip == 0) flip = s1[i] * s2[i];
            if (s1[i] != flip * s2[i]) {
                verdict = false;
                break;
            }
        }
    }
    if (b1.ambient_dim() <= enumeration_limit()) {
        bool by_enum = enumerate_sign_vectors(b1) == enumerate_sign_vectors(b2);
        if (by_enum != verdict)
            throw std::logic_error("sign_sets_equal: chirotope and enumeration disagree");
    }
    return verdict;
}

DualityResult duality_check(const SubspaceBasis& b) {
    check_limit(b.ambient_dim());
    const int n = b.ambient_dim();
    SignVectorSet sigma = enumerate_sign_vectors(b);
    SignVectorSet sigma_perp = enumerate_sign_vectors(orthogonal_complement(b));

    // brute-force orthogonal set of sigma over all of {-,0,+}^n
    SignVectorSet expected;
    std::vector<int8_t> cand(n, -1);
    while (true) {
        SignVector s{std::vector<int8_t>(cand)};
        bool ortho = true;
        for (const auto& tau : sigma)
            if (!orthogonal_pair(s, tau)) {
                ortho = false;
                break;
            }
        if (ortho) expected.insert(s);
        int i = 0;
        for (; i < n; ++i) {
            if (cand[i] < 1) {
                ++cand[i];
                break;
            }
            cand[i] = -1;
        }
        if (i == n) break;
    }

    if (expected == sigma_perp) return {true, std::nullopt};
    DualityResult res;
    res.ok = false;
    for (const auto& v : expected)
        if (!sigma_perp.count(v)) {
            res.counterexample = v;
            return res;
        }
    for (const auto& v : sigma_perp)
        if (!expected.count(v)) {
            res.counterexample = v;
            return res;
        }
    return res;
}

int FaceLattice::index_of(const SignVector& v) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), v);
    if (it == elements.end() || *it != v) return -1;
    return static_cast<int>(it - elements.begin());
}

FaceLattice face_lattice(const SubspaceBasis& b) {
    FaceLattice lat;
    lat.ambient_dim = b.ambient_dim();
    for (const auto& v : enumerate_sign_vectors(b))
        if (v.is_nonnegative()) lat.elements.push_back(v);
    std::sort(lat.elements.begin(), lat.elements.end());

    // longest chain from the zero vector; dominance implies strictly larger support
    const int sz = lat.size();
    std::vector<int> order(sz);
    for (int i = 0; i < sz; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int bb) {
        return lat.elements[a].support_size() < lat.elements[bb].support_size();
    });
    lat.height.assign(sz, 0);
    for (int oi : order)
        for (int j = 0; j < sz; ++j)
            if (j != oi && lat.elements[j].below(lat.elements[oi]))
                lat.height[oi] = std::max(lat.height[oi], lat.height[j] + 1);
    return lat;
}

namespace {

bool iso_backtrack(const FaceLattice& ft, const FaceLattice& f, const std::vector<int>& order, size_t pos,
                   std::vector<int>& phi, std::vector<bool>& used) {
    if (pos == order.size()) return true;
    int i = order[pos];
    for (int j = 0; j < f.size(); ++j) {
        if (used[j]) continue;
        if (f.height[j] != ft.height[i]) continue;
        if (!f.elements[j].below(ft.elements[i])) continue;  // dominance tau >= phi(tau)
        bool ok = true;
        for (size_t p = 0; p < pos && ok; ++p) {
            int ii = order[p];
            ok = ft.leq(ii, i) == f.leq(phi[ii], j) && ft.leq(i, ii) == f.leq(j, phi[ii]);
        }
        if (!ok) continue;
        phi[i] = j;
        used[j] = true;
        if (iso_backtrack(ft, f, order, pos + 1, phi, used)) return true;
        used[j] = false;
        phi[i] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_dominant_lattice_iso(const FaceLattice& ft, const FaceLattice& f) {
    if (ft.ambient_dim != f.ambient_dim) return std::nullopt;
    if (ft.size() != f.size()) return std::nullopt;
    auto hs1 = ft.height;
    auto hs2 = f.height;
    std::sort(hs1.begin(), hs1.end());
    std::sort(hs2.begin(), hs2.end());
    if (hs1 != hs2) return std::nullopt;

    std::vector<int> order(ft.size());
    for (int i = 0; i < ft.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (ft.height[a] != ft.height[b]) return ft.height[a] < ft.height[b];
        return ft.elements[a] < ft.elements[b];
    });
    std::vector<int> phi(ft.size(), -1);
    std::vector<bool> used(f.size(), false);
    if (iso_backtrack(ft, f, order, 0, phi, used)) return phi;
    return std::nullopt;
}

ConservativityResult is_conservative(const SubspaceBasis& b_sperp) {
    const int n = b_sperp.ambient_dim();
    const int d = b_sperp.dim();
    if (n == 0) return {true, {}};
    std::vector<LinearConstraint> cons;
    std::vector<Rational> cost(d);
    for (int k = 0; k < n; ++k) {
        LinearConstraint c;
        c.a = b_sperp.row(k);
        c.rel = Rel::ge;
        c.b = 1;
        for (int j = 0; j < d; ++j) cost[j] += c.a[j];
        cons.push_back(std::move(c));
    }
    auto lambda = lp_minimize(d, cost, cons);
    if (!lambda) return {false, {}};
    auto witness = primitive_integer_vector(b_sperp.basis() * *lambda);
    return {true, witness};
}

}  // namespace gmak
