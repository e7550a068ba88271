#include "sap/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sap/errors.hpp"
#include "sap/polynomial.hpp"

namespace sap {

namespace {

[[noreturn]] void parse_fail(std::string_view source, std::size_t line, std::size_t col, const std::string& what) {
  std::ostringstream os;
  os << source << ":" << line << ":" << col << ": " << what;
  throw Error(ErrorKind::ParseError, os.str());
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  // Trailing blank lines are allowed.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::size_t parse_dim(std::string_view tok, std::string_view source, std::size_t line, std::size_t col) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v == 0)
    parse_fail(source, line, col, "expected a positive integer, got '" + std::string(tok) + "'");
  return v;
}

std::pair<std::size_t, std::size_t> parse_header(const std::vector<std::string_view>& lines, std::string_view source) {
  if (lines.empty()) parse_fail(source, 1, 1, "empty input");
  const std::string_view h = lines[0];
  const std::size_t sp = h.find(' ');
  if (sp == std::string_view::npos) parse_fail(source, 1, h.size() + 1, "header must be \"n m\"");
  const std::size_t n = parse_dim(h.substr(0, sp), source, 1, 1);
  const std::size_t m = parse_dim(h.substr(sp + 1), source, 1, sp + 2);
  if (lines.size() != n + 1)
    parse_fail(source, std::min(lines.size(), n + 1) + (lines.size() > n + 1 ? 1 : 0), 1,
               "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  return {n, m};
}

double parse_double(std::string_view tok, std::string_view source, std::size_t line, std::size_t col) {
  double v = 0.0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [p, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty() || !std::isfinite(v))
    parse_fail(source, line, col, "not a finite number: '" + std::string(tok) + "'");
  return v;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(',', start);
    out.push_back(trim(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);  // no "-0"
  return buf;
}

json positions_json(std::span<const Position> ps) {
  json arr = json::array();
  for (Position p : ps) arr.push_back({p.row + 1, p.col + 1});
  return arr;
}

json matrix_json(const RealMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

json deletions_json(const std::map<Position, DeletionOutcome>& per_deletion) {
  json arr = json::array();
  for (const auto& [pos, out] : per_deletion) {
    json d;
    d["position"] = {pos.row + 1, pos.col + 1};
    d["obstruction"] = to_string(out.reported.kind);
    d["detail"] = out.reported.detail();
    json kinds = json::array();
    for (const Obstruction& o : out.found) kinds.push_back(to_string(o.kind));
    d["detected"] = kinds;
    d["confirmed"] = out.confirmed;
    if (out.tally) d["samples"] = {{"same", out.tally->same}, {"zero", out.tally->zero}, {"opposite", out.tally->opposite}};
    arr.push_back(d);
  }
  return arr;
}

void dump_to(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << json(it.key()).dump() << ": ";
      dump_to(os, it.value(), indent + 1);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array()) {
    // Arrays of scalars stay on one line.
    bool flat = true;
    for (const auto& e : j) flat = flat && !e.is_structured();
    if (j.empty()) {
      os << "[]";
    } else if (flat) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        dump_to(os, j[i], indent + 1);
      }
      os << "]";
    } else {
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        dump_to(os, j[i], indent + 1);
      }
      os << "\n" << pad << "]";
    }
  } else if (j.is_number_float()) {
    const double v = j.get<double>();
    os << (std::isfinite(v) ? fmt_double(v) : "null");
  } else {
    os << j.dump();
  }
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return fmt_double(v.get<double>());
  if (v.is_structured()) {
    std::ostringstream os;
    dump_to(os, v, 0);
    std::string s = os.str();
    std::string out;
    bool skip = false;
    for (char c : s) {
      if (c == '\n') {
        skip = true;
      } else if (!(skip && c == ' ')) {
        skip = false;
        out.push_back(c);
      }
    }
    return out;
  }
  return v.dump();
}

std::string csv_cell(const json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q.push_back('"');
    if (c != ' ') q.push_back(c);
  }
  return q + "\"";
}

}  // namespace

SignPattern parse_pattern(std::string_view text, std::string_view source) {
  const auto lines = split_lines(text);
  const auto [n, m] = parse_header(lines, source);
  std::vector<std::string> rows;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string_view l = lines[i];
    for (std::size_t c = 0; c < l.size(); ++c)
      if (l[c] != '+' && l[c] != '-' && l[c] != '0')
        parse_fail(source, i + 1, c + 1, std::string("invalid sign character '") + l[c] + "'");
    if (l.size() != m)
      parse_fail(source, i + 1, std::min(l.size(), m) + 1,
                 "expected " + std::to_string(m) + " entries, found " + std::to_string(l.size()));
    rows.emplace_back(l);
  }
  return SignPattern::from_rows(rows);
}

std::string format_pattern(const SignPattern& s) {
  std::string out = std::to_string(s.rows()) + " " + std::to_string(s.cols()) + "\n";
  for (const auto& r : s.row_strings()) out += r + "\n";
  return out;
}

RealMatrix parse_matrix(std::string_view text, std::string_view source) {
  const auto lines = split_lines(text);
  const auto [n, m] = parse_header(lines, source);
  RealMatrix out(n, m);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string_view l = lines[i];
    std::size_t pos = 0, j = 0;
    while (true) {
      const std::size_t sp = l.find(' ', pos);
      const std::string_view tok = l.substr(pos, sp == std::string_view::npos ? std::string_view::npos : sp - pos);
      if (j == m) parse_fail(source, i + 1, pos + 1, "more than " + std::to_string(m) + " entries");
      out(i - 1, j++) = parse_double(tok, source, i + 1, pos + 1);
      if (sp == std::string_view::npos) break;
      pos = sp + 1;
    }
    if (j != m)
      parse_fail(source, i + 1, l.size() + 1, "expected " + std::to_string(m) + " entries, found " + std::to_string(j));
  }
  return out;
}

std::string format_matrix(const RealMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + fmt_double(m(i, j));
    out += "\n";
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ":0:0: cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::size_t col = 1;
  for (const std::string& tok : split_commas(text)) {
    out.push_back(parse_double(tok, "<list>", 1, col));
    col += tok.size() + 1;
  }
  return out;
}

SpectrumList parse_complex_list(std::string_view text) {
  SpectrumList out;
  std::size_t col = 1;
  for (const std::string& tok : split_commas(text)) {
    if (tok.empty() || tok.back() != 'i') {
      out.emplace_back(parse_double(tok, "<list>", 1, col), 0.0);
    } else {
      // Split before the last sign that is not an exponent sign.
      const std::string body = tok.substr(0, tok.size() - 1);
      std::size_t split = 0;
      for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
          split = k;
          break;
        }
      }
      const std::string re = body.substr(0, split), im = body.substr(split);
      double imag = 0.0;
      if (im.empty() || im == "+") {
        imag = 1.0;
      } else if (im == "-") {
        imag = -1.0;
      } else {
        imag = parse_double(im, "<list>", 1, col + split);
      }
      out.emplace_back(re.empty() ? 0.0 : parse_double(re, "<list>", 1, col), imag);
    }
    col += tok.size() + 1;
  }
  return out;
}

std::vector<Position> parse_positions(std::string_view text) {
  const std::vector<std::string> toks = split_commas(text);
  if (toks.size() % 2 != 0) throw Error(ErrorKind::ParseError, "<list>:1:1: positions need an even number of indices");
  std::vector<Position> out;
  std::size_t col = 1;
  for (std::size_t k = 0; k < toks.size(); k += 2) {
    const std::size_t i = parse_dim(toks[k], "<list>", 1, col);
    col += toks[k].size() + 1;
    const std::size_t j = parse_dim(toks[k + 1], "<list>", 1, col);
    col += toks[k + 1].size() + 1;
    out.push_back({i - 1, j - 1});
  }
  return out;
}

json to_json(const NilpotentCertificate& c) {
  json j;
  j["n"] = c.params.n;
  j["r"] = c.params.r;
  j["t_h"] = c.t_h;
  if (c.bracket) {
    const mpq_class lo = to_rational(c.bracket->lo), hi = to_rational(c.bracket->hi);
    j["t_h_bracket"] = {lo.get_num().get_str(), lo.get_den().get_str(), hi.get_num().get_str(), hi.get_den().get_str()};
  } else {
    j["t_h_bracket"] = {"1", "1", "1", "1"};
  }
  j["a0"] = c.a0;
  j["residual"] = c.residual;
  j["chain_verified"] = c.chain_verified;
  j["positivity_certified"] = c.positivity_certified;
  return j;
}

json to_json(const JacobianReport& r) {
  const KnrParams p = r.evaluation_point.params();
  json j;
  j["n"] = p.n;
  j["r"] = p.r;
  j["t_h"] = r.evaluation_point.b();
  j["det_lu"] = r.det_lu;
  j["det_blocks"] = r.det_blocks;
  j["positive"] = r.positive;
  j["blocks_agree"] = r.blocks_agree;
  j["conclusion"] = r.positive && r.blocks_agree ? "SAP_certified" : "inconclusive";
  std::vector<Position> vars;
  for (int i = 0; i + 1 < p.n; ++i) vars.push_back({static_cast<std::size_t>(i), 0});
  vars.push_back(p.b_position());
  j["positions"] = positions_json(vars);
  return j;
}

json to_json(const RealizationResult& r, const CoeffVector& target) {
  json j;
  j["n"] = r.params.params().n;
  j["r"] = r.params.params().r;
  j["target"] = target.alpha;
  j["matrix"] = matrix_json(r.matrix);
  j["scaling_c"] = r.scaling_c;
  j["a"] = r.params.a();
  j["b"] = r.params.b();
  j["residual"] = r.residual;
  j["newton_iters"] = r.newton_iters;
  json eig = json::array();
  for (const auto& z : spectrum(r.matrix)) eig.push_back({z.real(), z.imag()});
  j["spectrum"] = eig;
  return j;
}

json to_json(const MsapReport& r) {
  json j;
  j["n"] = r.params.n;
  j["r"] = r.params.r;
  j["verdict"] = r.verdict;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["deletions"] = deletions_json(r.per_deletion);
  return j;
}

json to_json(const PatternScan& s) {
  json j;
  j["pattern"] = s.pattern.row_strings();
  j["verdict"] = s.verdict;
  j["seed"] = s.seed;
  j["samples"] = s.samples;
  j["deletions"] = deletions_json(s.per_deletion);
  return j;
}

json to_json(const NJCertificate& c) {
  json j;
  j["pattern"] = c.pattern.row_strings();
  j["matrix"] = matrix_json(c.nilpotent_point);
  j["positions"] = positions_json(c.variable_positions);
  j["det"] = c.jacobian_det;
  j["residual"] = c.nilpotency_residual;
  j["conclusion"] = c.conclusion == NJConclusion::SapCertified ? "SAP_certified" : "inconclusive";
  return j;
}

std::string dump_json(const json& j) {
  std::ostringstream os;
  dump_to(os, j, 0);
  os << "\n";
  return os.str();
}

OutputFormat parse_output_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw Error(ErrorKind::InvalidInput, "unknown format '" + std::string(s) + "'");
}

std::string render(const json& j, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return dump_json(j);
    case OutputFormat::Csv: return render_csv_table({j});
    case OutputFormat::Text: {
      std::string out;
      for (auto it = j.begin(); it != j.end(); ++it) out += it.key() + ": " + scalar_text(it.value()) + "\n";
      return out;
    }
  }
  return {};
}

std::string render_csv_table(const std::vector<json>& rows) {
  if (rows.empty()) return {};
  std::string out;
  std::vector<std::string> keys;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) keys.push_back(it.key());
  for (std::size_t k = 0; k < keys.size(); ++k) out += (k ? "," : "") + keys[k];
  out += "\n";
  for (const json& row : rows) {
    for (std::size_t k = 0; k < keys.size(); ++k) out += (k ? "," : "") + (row.contains(keys[k]) ? csv_cell(row[keys[k]]) : "");
    out += "\n";
  }
  return out;
}

}  // namespace sap
