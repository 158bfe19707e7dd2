#include "tqsim/kauffman.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

namespace tqsim {

LaurentPoly bracket_loop_value() {
  LaurentPoly d;
  d.add_term(2, -1);
  d.add_term(-2, -1);
  return d;
}

namespace {

// A Temperley-Lieb state is a planar pairing of 2n endpoints: 0..n-1 are the
// bottom boundary, n..2n-1 the advancing frontier. Closed loops are factored
// out as they form, multiplying the coefficient by d.
using Pairing = std::vector<int>;

struct StateMap {
  std::map<Pairing, LaurentPoly> terms;

  void add(const Pairing& p, const LaurentPoly& coeff) {
    auto [it, inserted] = terms.emplace(p, coeff);
    if (!inserted) it->second = it->second + coeff;
  }
};

// Applies the cap-cup E_j (1-based j) to a pairing; returns the number of
// closed loops formed (0 or 1).
int apply_capcup(Pairing& p, int n, int j) {
  const int f1 = n + (j - 1);
  const int f2 = n + j;
  const int x = p[f1];
  const int y = p[f2];
  int loops = 0;
  if (x == f2) {
    loops = 1;  // the two frontier points were already partners
  } else {
    p[x] = y;
    p[y] = x;
  }
  p[f1] = f2;
  p[f2] = f1;
  return loops;
}

int count_closure_loops(const Pairing& p, int n, Closure closure) {
  // Closure edges join endpoint pairs; together with the pairing arcs they
  // form disjoint cycles.
  std::vector<int> closure_partner(2 * n);
  if (closure == Closure::trace) {
    for (int i = 0; i < n; ++i) {
      closure_partner[i] = n + i;
      closure_partner[n + i] = i;
    }
  } else {
    for (int i = 0; i < n; i += 2) {
      closure_partner[i] = i + 1;
      closure_partner[i + 1] = i;
      closure_partner[n + i] = n + i + 1;
      closure_partner[n + i + 1] = n + i;
    }
  }
  std::vector<bool> seen(2 * n, false);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    ++loops;
    int v = start;
    do {
      seen[v] = true;
      int w = p[v];
      seen[w] = true;
      v = closure_partner[w];
    } while (v != start);
  }
  return loops;
}

}  // namespace

LaurentPoly bracket(const ClosedKnot& k, int max_crossings) {
  const int n = k.braid.strands;
  const int crossings = static_cast<int>(k.braid.letters.size());
  if (crossings > max_crossings)
    throw std::runtime_error("bracket: crossing limit exceeded");
  if (k.closure == Closure::plat && n % 2 != 0)
    throw std::invalid_argument("plat closure requires an even number of strands");

  const LaurentPoly d = bracket_loop_value();

  Pairing ident(2 * n);
  for (int i = 0; i < n; ++i) {
    ident[i] = n + i;
    ident[n + i] = i;
  }

  StateMap states;
  states.add(ident, LaurentPoly::constant(1));

  for (int g : k.braid.letters) {
    const int j = std::abs(g);
    StateMap next;
    for (const auto& [pairing, coeff] : states.terms) {
      // rho_A(b_j) = A E_j + A^-1 I ; the inverse swaps the weights.
      const int e_exp = (g > 0) ? +1 : -1;
      next.add(pairing, coeff * LaurentPoly::monomial(1, -e_exp));
      Pairing with_cap = pairing;
      LaurentPoly c = coeff * LaurentPoly::monomial(1, e_exp);
      if (apply_capcup(with_cap, n, j) == 1) c = c * d;
      next.add(with_cap, c);
    }
    states = std::move(next);
  }

  LaurentPoly total;
  for (const auto& [pairing, coeff] : states.terms) {
    const int loops = count_closure_loops(pairing, n, k.closure);
    LaurentPoly term = coeff;
    for (int i = 1; i < loops; ++i) term = term * d;
    total = total + term;
  }
  return total;
}

JonesPoly jones(const ClosedKnot& k, int max_crossings) {
  JonesPoly out;
  out.writhe = writhe(k);
  LaurentPoly b = bracket(k, max_crossings);
  // (-A^3)^{-w} = (-1)^w A^{-3w}
  const int w = out.writhe;
  LaurentPoly factor = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
  out.in_A = b * factor;
  return out;
}

std::complex<double> bracket_variable_at_root(int k_param) {
  if (k_param < 3) throw std::invalid_argument("root-of-unity parameter must be >= 3");
  const double pi = std::acos(-1.0);
  return std::complex<double>(0.0, 1.0) *
         std::exp(std::complex<double>(0.0, -pi / (2.0 * k_param)));
}

std::complex<double> eval_at_root(const JonesPoly& j, int k_param) {
  return j.in_A.eval(bracket_variable_at_root(k_param));
}

}  // namespace tqsim
