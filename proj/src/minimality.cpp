#include "sap/minimality.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "sap/charpoly.hpp"
#include "sap/errors.hpp"

namespace sap {

std::string to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::TooFewEntries: return "TooFewEntries";
    case ObstructionKind::ReducibleFixedTraceBlocks: return "ReducibleFixedTraceBlocks";
    case ObstructionKind::FixedSignCoefficient: return "FixedSignCoefficient";
    case ObstructionKind::Unobstructed: return "Unobstructed";
  }
  return "?";
}

std::string Obstruction::detail() const {
  std::ostringstream os;
  switch (kind) {
    case ObstructionKind::TooFewEntries:
      os << "irreducible with " << nonzeros << " nonzero entries";
      break;
    case ObstructionKind::ReducibleFixedTraceBlocks:
      os << "blocks";
      for (const auto& b : blocks) {
        os << " {";
        for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i] + 1;
        os << "}";
      }
      break;
    case ObstructionKind::FixedSignCoefficient:
      os << "alpha_" << coefficient << (sign == Sign::Plus ? " > 0" : sign == Sign::Minus ? " < 0" : " = 0");
      if (sampled_only) os << " (sampled)";
      break;
    case ObstructionKind::Unobstructed:
      os << "no obstruction detected";
      break;
  }
  return os.str();
}

std::optional<Obstruction> entry_count_obstruction(const SignPattern& s) {
  if (!s.square()) throw Error(ErrorKind::DimensionError, "pattern must be square");
  const std::size_t count = nonzero_count(s);
  if (!is_irreducible(s) || count + 1 >= 2 * s.rows()) return std::nullopt;
  Obstruction o;
  o.kind = ObstructionKind::TooFewEntries;
  o.nonzeros = count;
  return o;
}

std::optional<Obstruction> reducibility_obstruction(const SignPattern& s) {
  if (!s.square()) throw Error(ErrorKind::DimensionError, "pattern must be square");
  auto comps = strongly_connected_components(s);
  if (comps.size() < 2) return std::nullopt;
  for (const auto& comp : comps) {
    bool pos = false, neg = false;
    for (std::size_t v : comp) {
      pos = pos || s(v, v) == Sign::Plus;
      neg = neg || s(v, v) == Sign::Minus;
    }
    if (pos != neg) {
      Obstruction o;
      o.kind = ObstructionKind::ReducibleFixedTraceBlocks;
      o.blocks = std::move(comps);
      return o;
    }
  }
  return std::nullopt;
}

namespace {

// alpha_k of the normalized K_{n,r} form with (n,n) = -d, as signed
// monomials. Variables: a_j -> j (1..n-1), b -> n, d -> n+1; a_0 = 1.
struct Term {
  int sign;
  std::vector<int> vars;
};

std::vector<Term> alpha_terms(KnrParams p, int k) {
  const int b = p.n, d = p.n + 1;
  std::vector<Term> out;
  if (k <= p.n - 1) out.push_back({+1, {k}});
  out.push_back({-1, k - 1 >= 1 ? std::vector<int>{d, k - 1} : std::vector<int>{d}});
  if (k >= p.r) out.push_back({+1, k - p.r >= 1 ? std::vector<int>{b, k - p.r} : std::vector<int>{b}});
  return out;
}

// All surviving terms share the claimed sign.
bool fixed_after_deleting(KnrParams p, int k, int var, Sign claimed) {
  int survivors = 0;
  for (const Term& t : alpha_terms(p, k)) {
    if (std::find(t.vars.begin(), t.vars.end(), var) != t.vars.end()) continue;
    ++survivors;
    if (t.sign != to_int(claimed)) return false;
  }
  return survivors > 0;
}

struct SignCounts {
  int pos = 0, zero = 0, neg = 0;
};

// Per-coefficient sign counts over random members of Q(s).
std::vector<SignCounts> sample_signs(const SignPattern& s, std::uint64_t seed, int samples, double lo, double hi) {
  const std::size_t n = s.rows();
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> logmag(std::log(lo), std::log(hi));
  const auto nz = s.nonzero_positions();
  std::vector<SignCounts> counts(n);
  for (int t = 0; t < samples; ++t) {
    RealMatrix a(n, n);
    for (Position q : nz) a(q.row, q.col) = to_int(s.at(q)) * std::exp(logmag(rng));
    const CoeffVector c = char_coeffs(a, Precision::Extended);
    const double scale = std::max(1.0, a.norm_inf());
    for (std::size_t k = 0; k < n; ++k) {
      const double band = 1e-12 * std::pow(scale, static_cast<double>(k + 1));
      if (c[k] > band) {
        ++counts[k].pos;
      } else if (c[k] < -band) {
        ++counts[k].neg;
      } else {
        ++counts[k].zero;
      }
    }
  }
  return counts;
}

std::uint64_t deletion_seed(std::uint64_t seed, Position q) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(q.row), static_cast<std::uint32_t>(q.col)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

// fixed sign, then reducibility, then entry count.
void assemble(DeletionOutcome& out, std::optional<Obstruction> fixed, const SignPattern& sub) {
  if (fixed) out.found.push_back(*fixed);
  if (auto o = reducibility_obstruction(sub)) out.found.push_back(*o);
  if (auto o = entry_count_obstruction(sub)) out.found.push_back(*o);
  if (!out.found.empty()) out.reported = out.found.front();
}

}  // namespace

std::optional<Obstruction> fixed_sign_obstruction(KnrParams p, Position deleted) {
  p = KnrParams::make(p.n, p.r);
  const auto n = static_cast<std::size_t>(p.n);
  const SignPattern k = build_pattern(p);
  if (deleted.row >= n || deleted.col >= n || k.at(deleted) == Sign::Zero)
    throw Error(ErrorKind::InvalidInput, "deleted position is not a nonzero of K_{n,r}");

  int var = 0, coefficient = 0;
  Sign claimed = Sign::Zero;
  if (deleted == p.b_position()) {
    var = p.n;
    coefficient = p.n;
    claimed = Sign::Minus;
  } else if (deleted.row == n - 1 && deleted.col == n - 1) {
    var = p.n + 1;
    coefficient = 1;
    claimed = Sign::Plus;
  } else if (deleted.col == 0 && deleted.row + 1 < n) {
    const int j = static_cast<int>(deleted.row) + 1;
    var = j;
    coefficient = j == 1 ? 1 : j + 1;
    claimed = j == 1 ? Sign::Minus : Sign::Plus;
  } else {
    return std::nullopt;  // superdiagonal
  }
  if (!fixed_after_deleting(p, coefficient, var, claimed)) return std::nullopt;
  Obstruction o;
  o.kind = ObstructionKind::FixedSignCoefficient;
  o.coefficient = coefficient;
  o.sign = claimed;
  return o;
}

SampleTally sample_coefficient_sign(const SignPattern& s, int k, Sign claimed, std::uint64_t seed, int samples,
                                    double lo, double hi) {
  if (!s.square()) throw Error(ErrorKind::DimensionError, "pattern must be square");
  if (k < 1 || static_cast<std::size_t>(k) > s.rows()) throw Error(ErrorKind::InvalidInput, "coefficient index out of range");
  const SignCounts c = sample_signs(s, seed, samples, lo, hi)[static_cast<std::size_t>(k - 1)];
  SampleTally t;
  t.zero = c.zero;
  switch (claimed) {
    case Sign::Plus: t.same = c.pos; t.opposite = c.neg; break;
    case Sign::Minus: t.same = c.neg; t.opposite = c.pos; break;
    case Sign::Zero: t.same = c.zero; t.zero = 0; t.opposite = c.pos + c.neg; break;
  }
  return t;
}

MsapReport verify_msap(KnrParams p, std::uint64_t seed, int samples) {
  p = KnrParams::make(p.n, p.r);
  MsapReport report;
  report.params = p;
  report.seed = seed;
  report.samples = samples;
  report.verdict = true;
  for (const auto& [pos, sub] : one_entry_subpatterns(build_pattern(p))) {
    DeletionOutcome out;
    auto fixed = fixed_sign_obstruction(p, pos);
    if (fixed) {
      out.tally = sample_coefficient_sign(sub, fixed->coefficient, fixed->sign, deletion_seed(seed, pos), samples);
      out.confirmed = out.tally->opposite == 0 && out.tally->zero == 0;
    }
    assemble(out, fixed, sub);
    report.verdict = report.verdict && !out.found.empty() && out.confirmed;
    report.per_deletion.emplace(pos, std::move(out));
  }
  return report;
}

PatternScan scan_minimality(const SignPattern& s, std::uint64_t seed, int samples) {
  if (!s.square()) throw Error(ErrorKind::DimensionError, "pattern must be square");
  PatternScan scan;
  scan.pattern = s;
  scan.seed = seed;
  scan.samples = samples;
  scan.verdict = true;
  for (const auto& [pos, sub] : one_entry_subpatterns(s)) {
    DeletionOutcome out;
    std::optional<Obstruction> fixed;
    const auto counts = sample_signs(sub, deletion_seed(seed, pos), samples, 0.1, 10.0);
    for (std::size_t k = 0; k < counts.size() && !fixed; ++k) {
      const SignCounts& c = counts[k];
      if (c.pos > 0 && c.neg > 0) continue;
      Obstruction o;
      o.kind = ObstructionKind::FixedSignCoefficient;
      o.coefficient = static_cast<int>(k + 1);
      o.sign = c.pos > 0 ? Sign::Plus : c.neg > 0 ? Sign::Minus : Sign::Zero;
      o.sampled_only = true;
      fixed = o;
    }
    assemble(out, fixed, sub);
    scan.verdict = scan.verdict && !out.found.empty();
    scan.per_deletion.emplace(pos, std::move(out));
  }
  return scan;
}

}  // namespace sap
