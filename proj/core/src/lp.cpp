#include "openchi/error.hpp"
#include "openchi/polytope.hpp"
#include "openchi/simplex.hpp"

namespace openchi {

namespace {

struct ExactOps {
  static int sign(const Rat& x) { return sgn(x); }
};

using Sx = detail::Simplex<Rat, ExactOps>;

// Rows of the shape -c * x_k <= 0 (c > 0) are variable sign bounds;
// pulling them into the solver keeps the tableau narrow. The returned
// certificate still speaks about the original rows.
struct Prepared {
  Sx::Input input;
  std::vector<int> row_of_ineq;    // solver row index per original ineq, -1 if folded
  std::vector<int> bound_source;   // per variable: original ineq row acting as its bound
  std::vector<Rat> bound_coeff;    // the -c coefficient of that row
};

Prepared prepare(const HPolytope& h) {
  Prepared pr;
  pr.input.nvars = h.dim;
  pr.input.nonneg.assign(h.dim, 0);
  pr.bound_source.assign(h.dim, -1);
  pr.bound_coeff.assign(h.dim, Rat(0));
  pr.row_of_ineq.assign(h.ineqs.size(), -1);

  for (size_t r = 0; r < h.ineqs.size(); ++r) {
    const auto& [a, b] = h.ineqs[r];
    require(static_cast<int>(a.size()) == h.dim, Ec::DimensionMismatch, "inequality width");
    if (sgn(b) == 0) {
      int nz = -1;
      bool single = true;
      for (int k = 0; k < h.dim && single; ++k)
        if (sgn(a[k]) != 0) {
          if (nz >= 0) single = false;
          nz = k;
        }
      if (single && nz >= 0 && sgn(a[nz]) < 0 && pr.bound_source[nz] < 0) {
        pr.input.nonneg[nz] = 1;
        pr.bound_source[nz] = static_cast<int>(r);
        pr.bound_coeff[nz] = a[nz];
        continue;
      }
    }
    pr.row_of_ineq[r] = static_cast<int>(pr.input.rows.size());
    pr.input.rows.push_back(Sx::Row{a, b, false});
  }
  for (const auto& [e, c] : h.eqs) {
    require(static_cast<int>(e.size()) == h.dim, Ec::DimensionMismatch, "equation width");
    pr.input.rows.push_back(Sx::Row{e, c, true});
  }
  return pr;
}

FarkasCertificate extract_farkas(const HPolytope& h, const Prepared& pr,
                                 const Sx::Output& res) {
  FarkasCertificate cert;
  cert.ineq_mult.assign(h.ineqs.size(), Rat(0));
  cert.eq_mult.assign(h.eqs.size(), Rat(0));
  for (size_t r = 0; r < h.ineqs.size(); ++r)
    if (pr.row_of_ineq[r] >= 0) cert.ineq_mult[r] = res.row_mult[pr.row_of_ineq[r]];
  size_t eq_base = pr.input.rows.size() - h.eqs.size();
  for (size_t j = 0; j < h.eqs.size(); ++j)
    cert.eq_mult[j] = res.row_mult[eq_base + j];
  // bound multipliers belong to the folded sign rows: g_k * x_k >= 0 was
  // used, and the source row reads bound_coeff * x_k <= 0
  for (int k = 0; k < h.dim; ++k) {
    int src = pr.bound_source[k];
    if (src < 0 || sgn(res.bound_mult[k]) == 0) continue;
    cert.ineq_mult[src] = res.bound_mult[k] / (-pr.bound_coeff[k]);
  }
  return cert;
}

}  // namespace

RatVec AffineMap::apply(const RatVec& x) const {
  RatVec y = mat_apply(matrix, x);
  for (int i = 0; i < target_dim; ++i) y[i] += offset[i];
  return y;
}

RatVec AffineMap::apply_linear(const RatVec& d) const { return mat_apply(matrix, d); }

bool point_satisfies(const HPolytope& h, const RatVec& x) {
  if (static_cast<int>(x.size()) != h.dim) return false;
  for (const auto& [a, b] : h.ineqs)
    if (dot(a, x) > b) return false;
  for (const auto& [e, c] : h.eqs)
    if (dot(e, x) != c) return false;
  return true;
}

bool verify_farkas(const HPolytope& h, const FarkasCertificate& cert) {
  if (cert.ineq_mult.size() != h.ineqs.size()) return false;
  if (cert.eq_mult.size() != h.eqs.size()) return false;
  for (const auto& l : cert.ineq_mult)
    if (sgn(l) < 0) return false;
  RatVec combo(h.dim, Rat(0));
  Rat rhs(0);
  for (size_t r = 0; r < h.ineqs.size(); ++r) {
    if (sgn(cert.ineq_mult[r]) == 0) continue;
    for (int k = 0; k < h.dim; ++k) combo[k] += cert.ineq_mult[r] * h.ineqs[r].first[k];
    rhs += cert.ineq_mult[r] * h.ineqs[r].second;
  }
  for (size_t j = 0; j < h.eqs.size(); ++j) {
    if (sgn(cert.eq_mult[j]) == 0) continue;
    for (int k = 0; k < h.dim; ++k) combo[k] += cert.eq_mult[j] * h.eqs[j].first[k];
    rhs += cert.eq_mult[j] * h.eqs[j].second;
  }
  // a valid combination reads 0 = combo.x <= rhs < 0
  return is_zero_vec(combo) && sgn(rhs) < 0;
}

Feasibility lp_feasible(const HPolytope& h) {
  Prepared pr = prepare(h);
  Sx::Output res = Sx::solve(pr.input, -1);
  require(res.status == Sx::Status::Optimal || res.status == Sx::Status::Infeasible,
          Ec::InternalCheckFailed, "feasibility solve did not terminate");
  Feasibility out;
  if (res.status == Sx::Status::Optimal) {
    out.feasible = true;
    out.witness = std::move(res.x);
    require(point_satisfies(h, out.witness), Ec::InternalCheckFailed,
            "feasibility witness failed substitution");
  } else {
    out.feasible = false;
    out.farkas = extract_farkas(h, pr, res);
    require(verify_farkas(h, out.farkas), Ec::InternalCheckFailed,
            "infeasibility certificate failed verification");
  }
  return out;
}

LpOutcome lp_optimize(const HPolytope& h, const RatVec& objective, bool maximize) {
  require(static_cast<int>(objective.size()) == h.dim, Ec::DimensionMismatch,
          "objective width");
  Prepared pr = prepare(h);
  pr.input.objective.assign(h.dim, Rat(0));
  for (int k = 0; k < h.dim; ++k)
    pr.input.objective[k] = maximize ? -objective[k] : objective[k];

  Sx::Output res = Sx::solve(pr.input, -1);
  LpOutcome out;
  switch (res.status) {
    case Sx::Status::Optimal:
      out.status = LpStatus::Optimal;
      out.point = std::move(res.x);
      require(point_satisfies(h, out.point), Ec::InternalCheckFailed,
              "optimum failed substitution");
      out.value = dot(objective, out.point);
      break;
    case Sx::Status::Infeasible:
      out.status = LpStatus::Infeasible;
      out.farkas = extract_farkas(h, pr, res);
      require(verify_farkas(h, out.farkas), Ec::InternalCheckFailed,
              "infeasibility certificate failed verification");
      break;
    case Sx::Status::Unbounded:
      out.status = LpStatus::Unbounded;
      break;
    default:
      fail(Ec::InternalCheckFailed, "optimizing solve did not terminate");
  }
  return out;
}

}  // namespace openchi
