#include "sap/nilpotent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sap/errors.hpp"

namespace sap {

RecurrencePolys recurrence_polys(KnrParams p) {
  p = KnrParams::make(p.n, p.r);
  if (p.r >= p.n) throw Error(ErrorKind::UnsupportedParams, "recurrence needs r < n");
  RecurrencePolys out;
  out.a.assign(static_cast<std::size_t>(p.n), IntPolynomial{1});
  for (int j = p.r; j < p.n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    out.a[uj] = out.a[uj - 1] - out.a[uj - static_cast<std::size_t>(p.r)].times_t();
  }
  out.h = out.a[static_cast<std::size_t>(p.n - 1)] - out.a[static_cast<std::size_t>(p.n - p.r)].times_t();
  return out;
}

namespace {

// Shrinks two disjoint-root brackets until lower.hi < upper.lo.
bool separate(ChainLink& lower, ChainLink& upper) {
  for (int i = 0; i < 4 && !(lower.root.bracket.hi < upper.root.bracket.lo); ++i) {
    refine_bracket(lower.root.bracket);
    refine_bracket(upper.root.bracket);
  }
  return lower.root.bracket.hi < upper.root.bracket.lo;
}

}  // namespace

MinChain min_chain(KnrParams p) {
  const RecurrencePolys polys = recurrence_polys(p);
  MinChain chain;
  chain.links.push_back({p.n, min_positive_root(polys.h)});
  for (int j = p.n - 1; j >= p.r; --j) chain.links.push_back({j, min_positive_root(polys.a[static_cast<std::size_t>(j)])});

  bool ok = true;
  for (std::size_t k = 0; k + 1 < chain.links.size(); ++k) ok = separate(chain.links[k], chain.links[k + 1]) && ok;
  // min Z of a_r = 1 - t is exactly 1.
  const IsolatedRoot& last = chain.links.back().root;
  ok = ok && polys.a[static_cast<std::size_t>(p.r)].sign_at(1.0) == 0 && last.bracket.lo < 1.0 && 1.0 < last.bracket.hi;
  chain.verified = ok;
  return chain;
}

bool verify_min_chain(KnrParams p) { return min_chain(p).verified; }

NilpotentCertificate nilpotent_realization(KnrParams p, Precision precision) {
  p = KnrParams::make(p.n, p.r);
  NilpotentCertificate cert;
  cert.params = p;
  const auto n = static_cast<std::size_t>(p.n);

  if (p.r == p.n) {
    // t = 1 with every a_j = 1 solves the coefficient equations.
    cert.t_h = 1.0;
    cert.a0.assign(n - 1, 1.0);
    cert.chain_verified = true;
    cert.positivity_certified = true;
    const CoeffVector c = char_coeffs(build_matrix(cert.realization()), precision);
    cert.residual = c.max_abs();
  } else {
    const RecurrencePolys polys = recurrence_polys(p);
    MinChain chain = min_chain(p);
    cert.chain_verified = chain.verified;
    const IsolatedRoot& th = chain.links.front().root;
    cert.t_h = th.value;
    cert.bracket = th.bracket;

    const mpq_class t = to_rational(cert.t_h);
    cert.a0.resize(n - 1);
    bool positive = true;
    for (std::size_t j = 1; j < n; ++j) {
      const IntPolynomial& aj = polys.a[j];
      cert.a0[j - 1] = nearest_double(aj.evaluate(t));
      positive = positive && cert.a0[j - 1] > 0.0;
      if (aj.degree() > 0) {
        // Positive on the whole bracket: endpoint signs plus no root inside.
        const SturmSequence sturm(aj);
        positive = positive && aj.sign_at(th.bracket.lo) > 0 && aj.sign_at(th.bracket.hi) > 0 &&
                   sturm.count(th.bracket.lo, th.bracket.hi) == 0;
      }
    }
    cert.positivity_certified = positive;
    if (!positive) {
      throw Error(ErrorKind::CertificationFailed, "a_j(t_h) not certified positive for n=" + std::to_string(p.n) +
                                                      ", r=" + std::to_string(p.r));
    }
    cert.residual = alpha_map(cert.realization()).max_abs();
  }

  if (!(cert.residual <= nilpotent_tolerance(p.n))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "residual " << cert.residual << " above " << nilpotent_tolerance(p.n) << " (n=" << p.n << ", r=" << p.r;
    if (cert.bracket) msg << ", bracket width " << cert.bracket->width();
    msg << ")";
    throw Error(ErrorKind::CertificationFailed, msg.str());
  }
  return cert;
}

}  // namespace sap
