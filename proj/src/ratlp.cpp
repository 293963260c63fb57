#include "netrep/ratlp.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/gmp.hpp>

namespace netrep {

namespace {

using Int = boost::multiprecision::mpz_int;

void validate_row(const SparseRow& row, int num_vars) {
  int prev = -1;
  for (const auto& [idx, coef] : row.a) {
    (void)coef;
    if (idx <= prev) throw std::invalid_argument("row indices must be sorted and unique");
    if (idx < 0 || idx >= num_vars) throw std::invalid_argument("row index out of range");
    prev = idx;
  }
}

// Scales a row by a positive rational so that all entries are coprime
// integers; returns the scale factor applied.
Rat normalize_row(SparseRow& row) {
  Int lcm = 1;
  for (const auto& [idx, coef] : row.a) {
    (void)idx;
    lcm = boost::multiprecision::lcm(lcm, denominator(coef));
  }
  lcm = boost::multiprecision::lcm(lcm, denominator(row.b));
  Int gcd = 0;
  auto fold = [&](const Rat& v) {
    const Int scaled = numerator(v) * (lcm / denominator(v));
    gcd = boost::multiprecision::gcd(gcd, scaled);
  };
  for (const auto& [idx, coef] : row.a) {
    (void)idx;
    fold(coef);
  }
  fold(row.b);
  if (gcd == 0) return Rat(1);  // zero row
  const Rat alpha = Rat(lcm) / Rat(gcd);
  for (auto& [idx, coef] : row.a) {
    (void)idx;
    coef *= alpha;
  }
  row.b *= alpha;
  return alpha;
}

// Revised simplex for: minimize the slack of the normalization row of the
// dual-side program
//   sum over rows i of y_i * (a_i, b_i) = (0, ..., 0, 1 - s),  y >= 0, s >= 0
// over columns [eq+ eq- | ge | slack | artificials]. Optimal slack 1 means
// the original system is feasible (witness from the simplex multipliers);
// optimal slack 0 yields the Farkas multipliers directly.
//
// The constraint matrix has num_vars + 1 rows but far more columns, so the
// iteration state is a dense basis inverse plus the original sparse
// columns; pricing is a sparse dot product per column.
class DualSideSimplex {
 public:
  DualSideSimplex(int num_vars, const std::vector<SparseRow>& eq, const std::vector<SparseRow>& ge)
      : m_(num_vars + 1), n_(num_vars) {
    auto put = [&](const SparseRow& row, int sign) {
      std::vector<std::pair<int, Rat>> col;
      for (const auto& [idx, coef] : row.a) col.emplace_back(idx, sign * coef);
      if (row.b != 0) col.emplace_back(n_, sign * row.b);
      cols_.push_back(std::move(col));
    };
    for (const auto& row : eq) {
      put(row, +1);
      put(row, -1);
    }
    for (const auto& row : ge) put(row, +1);
    slack_col_ = static_cast<int>(cols_.size());
    cols_.push_back({{n_, Rat(1)}});
    art_start_ = static_cast<int>(cols_.size());

    // Initial basis: artificials on the zero rows, the slack on the
    // normalization row. Its inverse is the identity.
    binv_.assign(m_, std::vector<Rat>(m_, Rat(0)));
    for (int i = 0; i < m_; ++i) binv_[i][i] = 1;
    x_basic_.assign(m_, Rat(0));
    x_basic_[n_] = 1;
    basis_.resize(m_);
    for (int i = 0; i < n_; ++i) basis_[i] = art_start_ + i;
    basis_[n_] = slack_col_;
    slack_row_ = n_;
    is_basic_.assign(art_start_, 0);
    is_basic_[slack_col_] = 1;
  }

  // Returns the optimal objective (0 or 1).
  //
  // Entering rule: most-negative reduced cost with smallest-index ties,
  // except that a long run of degenerate pivots switches to Bland's
  // smallest-index rule until the objective strictly improves again. Any
  // nonterminating pivot sequence is eventually all-degenerate, so the
  // fallback keeps the textbook termination guarantee while staying
  // deterministic.
  Rat solve() {
    int degenerate_streak = 0;
    while (true) {
      // pi = c_B B^{-1}; the only cost is on the slack, so pi is the
      // slack's row of the inverse (or zero once the slack has left, at
      // which point the objective is already 0).
      if (slack_row_ < 0) break;
      const std::vector<Rat>& pi = binv_[slack_row_];

      const bool bland = degenerate_streak >= 40;
      int enter = -1;
      Rat best_cost;
      for (int j = 0; j < art_start_; ++j) {
        if (is_basic_[j]) continue;
        Rat cbar = (j == slack_col_) ? Rat(1) : Rat(0);
        for (const auto& [row, coef] : cols_[j]) cbar -= pi[row] * coef;
        if (cbar < 0) {
          if (bland) {
            enter = j;
            break;
          }
          if (enter < 0 || cbar < best_cost) {
            enter = j;
            best_cost = cbar;
          }
        }
      }
      if (enter < 0) break;

      // Direction u = B^{-1} A_enter.
      std::vector<Rat> u(m_, Rat(0));
      for (const auto& [row, coef] : cols_[enter]) {
        for (int i = 0; i < m_; ++i) u[i] += binv_[i][row] * coef;
      }

      // A basic artificial with a nonzero direction entry leaves first
      // (basic value 0, so feasibility is kept for either sign).
      int leave = -1;
      for (int i = 0; i < m_; ++i) {
        if (basis_[i] >= art_start_ && u[i] != 0) {
          leave = i;
          break;
        }
      }
      if (leave < 0) {
        Rat best_ratio;
        for (int i = 0; i < m_; ++i) {
          if (u[i] > 0) {
            const Rat ratio = x_basic_[i] / u[i];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[leave])) {
              best_ratio = ratio;
              leave = i;
            }
          }
        }
      }
      if (leave < 0) throw std::logic_error("simplex: unbounded objective");

      const Rat theta = (u[leave] == 0) ? Rat(0) : x_basic_[leave] / u[leave];
      const bool degenerate = theta == 0;
      for (int i = 0; i < m_; ++i) {
        if (i != leave) x_basic_[i] -= theta * u[i];
      }
      x_basic_[leave] = theta;

      // Row update of the inverse.
      const Rat piv = u[leave];
      for (int j = 0; j < m_; ++j) binv_[leave][j] /= piv;
      for (int i = 0; i < m_; ++i) {
        if (i == leave || u[i] == 0) continue;
        const Rat factor = u[i];
        for (int j = 0; j < m_; ++j) binv_[i][j] -= factor * binv_[leave][j];
      }

      if (basis_[leave] < art_start_) is_basic_[basis_[leave]] = 0;
      if (basis_[leave] == slack_col_) slack_row_ = -1;
      basis_[leave] = enter;
      is_basic_[enter] = 1;
      if (enter == slack_col_) slack_row_ = leave;

      degenerate_streak = degenerate ? degenerate_streak + 1 : 0;
    }
    const Rat obj = objective();
    if (obj != 0 && obj != 1) throw std::logic_error("simplex: unexpected optimum");
    return obj;
  }

  // Value of column j in the final basic solution.
  Rat column_value(int j) const {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] == j) return x_basic_[i];
    }
    return Rat(0);
  }

  // Simplex multipliers c_B B^{-1}.
  std::vector<Rat> multipliers() const {
    if (slack_row_ < 0) return std::vector<Rat>(m_, Rat(0));
    return binv_[slack_row_];
  }

 private:
  Rat objective() const { return slack_row_ < 0 ? Rat(0) : x_basic_[slack_row_]; }

  int m_;
  int n_;
  int slack_col_;
  int art_start_;
  int slack_row_;  // basis position of the slack, -1 once it leaves
  std::vector<std::vector<std::pair<int, Rat>>> cols_;
  std::vector<std::vector<Rat>> binv_;
  std::vector<Rat> x_basic_;
  std::vector<int> basis_;
  std::vector<char> is_basic_;
};

Rat row_dot(const SparseRow& row, const std::vector<Rat>& x) {
  Rat v(0);
  for (const auto& [idx, coef] : row.a) v += coef * x[idx];
  return v;
}

}  // namespace

void LinSystem::validate() const {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  for (const auto& row : eq) validate_row(row, num_vars);
  for (const auto& row : ge) validate_row(row, num_vars);
  for (int j : nonneg) {
    if (j < 0 || j >= num_vars) throw std::invalid_argument("nonneg index out of range");
  }
}

FeasResult feasible(const LinSystem& sys) {
  sys.validate();

  // Internal copy with nonnegativity as explicit >= rows, rows normalized
  // to coprime integers. Multipliers are mapped back by the row scales.
  std::vector<SparseRow> eq = sys.eq;
  std::vector<SparseRow> ge = sys.ge;
  for (int j : sys.nonneg) ge.push_back(SparseRow{{{j, Rat(1)}}, Rat(0)});
  std::vector<Rat> eq_scale, ge_scale;
  for (auto& row : eq) eq_scale.push_back(normalize_row(row));
  for (auto& row : ge) ge_scale.push_back(normalize_row(row));

  // Rows with no coefficients either decide the system on their own or
  // carry multiplier zero; they never need a tableau column.
  {
    FarkasCertificate unit;
    unit.y_eq.assign(sys.eq.size(), Rat(0));
    unit.y_ge.assign(sys.ge.size(), Rat(0));
    unit.y_nonneg.assign(sys.nonneg.size(), Rat(0));
    for (std::size_t i = 0; i < eq.size(); ++i) {
      if (eq[i].a.empty() && eq[i].b != 0) {
        unit.y_eq[i] = (eq[i].b > 0 ? Rat(1) : Rat(-1)) * eq_scale[i];
        FeasResult out;
        out.farkas = std::move(unit);
        return out;
      }
    }
    for (std::size_t i = 0; i < ge.size(); ++i) {
      if (ge[i].a.empty() && ge[i].b > 0) {
        if (i < sys.ge.size()) {
          unit.y_ge[i] = ge_scale[i];
        } else {
          unit.y_nonneg[i - sys.ge.size()] = ge_scale[i];
        }
        FeasResult out;
        out.farkas = std::move(unit);
        return out;
      }
    }
  }
  std::vector<std::size_t> eq_keep, ge_keep;
  std::vector<SparseRow> eq_used, ge_used;
  for (std::size_t i = 0; i < eq.size(); ++i) {
    if (!eq[i].a.empty()) {
      eq_keep.push_back(i);
      eq_used.push_back(eq[i]);
    }
  }
  for (std::size_t i = 0; i < ge.size(); ++i) {
    if (!ge[i].a.empty()) {
      ge_keep.push_back(i);
      ge_used.push_back(ge[i]);
    }
  }

  FeasResult result;
  if (sys.num_vars == 0) {
    // Rows over the empty vector: feasible unless some row demands a
    // positive bound.
    for (std::size_t i = 0; i < eq.size(); ++i) {
      if (eq[i].b != 0) {
        FarkasCertificate cert;
        cert.y_eq.assign(sys.eq.size(), Rat(0));
        cert.y_ge.assign(sys.ge.size(), Rat(0));
        cert.y_nonneg.assign(sys.nonneg.size(), Rat(0));
        cert.y_eq[i] = (eq[i].b > 0 ? Rat(1) : Rat(-1)) * eq_scale[i];
        result.farkas = std::move(cert);
        return result;
      }
    }
    for (std::size_t i = 0; i < ge.size(); ++i) {
      if (ge[i].b > 0) {
        FarkasCertificate cert;
        cert.y_eq.assign(sys.eq.size(), Rat(0));
        cert.y_ge.assign(sys.ge.size(), Rat(0));
        cert.y_nonneg.assign(sys.nonneg.size(), Rat(0));
        cert.y_ge[i] = ge_scale[i];
        result.farkas = std::move(cert);
        return result;
      }
    }
    result.witness = std::vector<Rat>{};
    return result;
  }

  DualSideSimplex simplex(sys.num_vars, eq_used, ge_used);
  const Rat opt = simplex.solve();

  if (opt == 1) {
    const std::vector<Rat> pi = simplex.multipliers();
    std::vector<Rat> x(sys.num_vars);
    for (int j = 0; j < sys.num_vars; ++j) x[j] = -pi[j];
    if (!verify_feasible(sys, x)) throw std::logic_error("feasible(): witness self-check failed");
    result.witness = std::move(x);
    return result;
  }

  FarkasCertificate cert;
  cert.y_eq.assign(sys.eq.size(), Rat(0));
  cert.y_ge.assign(sys.ge.size(), Rat(0));
  cert.y_nonneg.assign(sys.nonneg.size(), Rat(0));
  int col = 0;
  for (std::size_t i = 0; i < eq_used.size(); ++i) {
    const Rat up = simplex.column_value(col++);
    const Rat dn = simplex.column_value(col++);
    cert.y_eq[eq_keep[i]] = (up - dn) * eq_scale[eq_keep[i]];
  }
  for (std::size_t i = 0; i < ge_used.size(); ++i) {
    const Rat y = simplex.column_value(col++) * ge_scale[ge_keep[i]];
    const std::size_t orig = ge_keep[i];
    if (orig < sys.ge.size()) {
      cert.y_ge[orig] = y;
    } else {
      cert.y_nonneg[orig - sys.ge.size()] = y;
    }
  }
  if (!verify_farkas(sys, cert)) throw std::logic_error("feasible(): Farkas self-check failed");
  result.farkas = std::move(cert);
  return result;
}

bool verify_feasible(const LinSystem& sys, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != sys.num_vars) return false;
  for (const auto& row : sys.eq) {
    if (row_dot(row, x) != row.b) return false;
  }
  for (const auto& row : sys.ge) {
    if (row_dot(row, x) < row.b) return false;
  }
  for (int j : sys.nonneg) {
    if (x[j] < 0) return false;
  }
  return true;
}

bool verify_farkas(const LinSystem& sys, const FarkasCertificate& cert) {
  if (cert.y_eq.size() != sys.eq.size() || cert.y_ge.size() != sys.ge.size() ||
      cert.y_nonneg.size() != sys.nonneg.size()) {
    return false;
  }
  for (const Rat& y : cert.y_ge) {
    if (y < 0) return false;
  }
  for (const Rat& y : cert.y_nonneg) {
    if (y < 0) return false;
  }
  std::vector<Rat> combo(sys.num_vars, Rat(0));
  Rat rhs(0);
  auto accumulate = [&](const SparseRow& row, const Rat& y) {
    if (y == 0) return;
    for (const auto& [idx, coef] : row.a) combo[idx] += y * coef;
    rhs += y * row.b;
  };
  for (std::size_t i = 0; i < sys.eq.size(); ++i) accumulate(sys.eq[i], cert.y_eq[i]);
  for (std::size_t i = 0; i < sys.ge.size(); ++i) accumulate(sys.ge[i], cert.y_ge[i]);
  for (std::size_t i = 0; i < sys.nonneg.size(); ++i) {
    combo[sys.nonneg[i]] += cert.y_nonneg[i];
  }
  for (const Rat& c : combo) {
    if (c != 0) return false;
  }
  return rhs > 0;
}

FeasResult nonneg_combination(const std::vector<Rat>& target,
                              const std::vector<std::vector<Rat>>& gens) {
  LinSystem sys;
  sys.num_vars = static_cast<int>(gens.size());
  for (const auto& g : gens) {
    if (g.size() != target.size()) throw std::invalid_argument("generator dimension mismatch");
  }
  for (std::size_t d = 0; d < target.size(); ++d) {
    SparseRow row;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i][d] != 0) row.a.emplace_back(static_cast<int>(i), gens[i][d]);
    }
    row.b = target[d];
    sys.eq.push_back(std::move(row));
  }
  for (int i = 0; i < sys.num_vars; ++i) sys.nonneg.push_back(i);
  return feasible(sys);
}

}  // namespace netrep
