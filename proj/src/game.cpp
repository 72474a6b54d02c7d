#include "polyrep/game.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace polyrep {

Rat parse_rational(const std::string& text) {
  std::string s = text;
  // strip whitespace
  s.erase(0, s.find_first_not_of(" \t"));
  if (!s.empty()) s.erase(s.find_last_not_of(" \t") + 1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rat r(s);  // GMP parses "p/q"
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return r;
  }
  auto dot = s.find('.');
  auto epos = s.find_first_of("eE");
  if (dot == std::string::npos && epos == std::string::npos) {
    return Rat(Int(s));
  }
  // decimal literal: sign? digits (.digits)? ([eE] sign? digits)?
  long exp10 = 0;
  std::string mantissa = s;
  if (epos != std::string::npos) {
    exp10 = std::stol(s.substr(epos + 1));
    mantissa = s.substr(0, epos);
  }
  std::string digits;
  long frac_digits = 0;
  bool neg = false;
  size_t i = 0;
  if (i < mantissa.size() && (mantissa[i] == '+' || mantissa[i] == '-')) {
    neg = mantissa[i] == '-';
    ++i;
  }
  bool seen_dot = false;
  for (; i < mantissa.size(); ++i) {
    char ch = mantissa[i];
    if (ch == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal: " + text);
      seen_dot = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (seen_dot) ++frac_digits;
    } else {
      throw std::invalid_argument("not a rational: " + text);
    }
  }
  if (digits.empty()) throw std::invalid_argument("not a rational: " + text);
  Int num(digits);
  if (neg) num = -num;
  long net = exp10 - frac_digits;
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, (unsigned long)(net < 0 ? -net : net));
  Rat r = net < 0 ? Rat(num, pow10) : Rat(num * pow10);
  r.canonicalize();
  return r;
}

GameSpec::GameSpec(std::vector<int> groups, MatQ payoff)
    : groups_(std::move(groups)), payoff_(std::move(payoff)) {
  if (groups_.empty()) throw std::invalid_argument("game needs at least one group");
  int n = 0;
  for (int k : groups_) {
    if (k < 1) throw std::invalid_argument("empty group");
    n += k;
  }
  if (payoff_.rows() != payoff_.cols() || payoff_.rows() != n)
    throw std::invalid_argument("payoff order mismatch: matrix is " +
                                std::to_string(payoff_.rows()) + "x" +
                                std::to_string(payoff_.cols()) + ", groups sum to " +
                                std::to_string(n));
  group_of_.resize(n);
  group_begin_.resize(groups_.size());
  int at = 0;
  for (size_t a = 0; a < groups_.size(); ++a) {
    group_begin_[a] = at;
    for (int k = 0; k < groups_[a]; ++k) group_of_[at++] = (int)a;
  }
}

MatQ GameSpec::block(int a, int b) const {
  return payoff_.block(group_begin(a), group_begin(b), groups_[a], groups_[b]);
}

GameSpec parse_game(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("game file is not valid JSON: ") + e.what());
  }
  if (!doc.contains("groups") || !doc.contains("payoff"))
    throw std::invalid_argument("game file needs keys \"groups\" and \"payoff\"");
  std::vector<int> groups;
  for (const auto& v : doc["groups"]) groups.push_back(v.get<int>());
  const auto& rows = doc["payoff"];
  MatQ a((Eigen::Index)rows.size(), rows.empty() ? 0 : (Eigen::Index)rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw std::invalid_argument("payoff matrix is not square");
    for (size_t j = 0; j < rows[i].size(); ++j) {
      const auto& cell = rows[i][j];
      if (cell.is_string())
        a((Eigen::Index)i, (Eigen::Index)j) = parse_rational(cell.get<std::string>());
      else if (cell.is_number_integer())
        a((Eigen::Index)i, (Eigen::Index)j) = Rat((long)cell.get<int64_t>());
      else if (cell.is_number_float())
        a((Eigen::Index)i, (Eigen::Index)j) = Rat(cell.get<double>());
      else
        throw std::invalid_argument("payoff entry is not a rational");
    }
  }
  return GameSpec(std::move(groups), std::move(a));
}

std::string serialize_game(const GameSpec& g) {
  std::ostringstream out;
  out << "{\n  \"groups\": [";
  for (int a = 0; a < g.num_groups(); ++a)
    out << (a ? ", " : "") << g.groups()[a];
  out << "],\n  \"payoff\": [\n";
  for (int i = 0; i < g.num_strategies(); ++i) {
    out << "    [";
    for (int j = 0; j < g.num_strategies(); ++j)
      out << (j ? ", " : "") << '"' << rat_str(g.payoff()(i, j)) << '"';
    out << (i + 1 < g.num_strategies() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

VecQ vector_field(const GameSpec& g, const VecQ& x) {
  const int n = g.num_strategies();
  VecQ ax = g.payoff() * x;
  VecQ out(n);
  for (int a = 0; a < g.num_groups(); ++a) {
    Rat avg = 0;
    for (int i = g.group_begin(a); i < g.group_end(a); ++i) avg += x[i] * ax[i];
    for (int i = g.group_begin(a); i < g.group_end(a); ++i)
      out[i] = x[i] * (ax[i] - avg);
  }
  return out;
}

VecQ vector_field_termwise(const GameSpec& g, const VecQ& x) {
  const int n = g.num_strategies();
  VecQ out = VecQ::Zero(n);
  for (int i = 0; i < n; ++i) {
    Rat payoff_i = 0;
    for (int k = 0; k < n; ++k) payoff_i += g.payoff()(i, k) * x[k];
    Rat group_avg = 0;
    int a = g.group_of(i);
    for (int j = g.group_begin(a); j < g.group_end(a); ++j)
      for (int k = 0; k < n; ++k) group_avg += x[j] * g.payoff()(j, k) * x[k];
    out[i] = x[i] * payoff_i - x[i] * group_avg;
  }
  return out;
}

bool equal_rows_equivalent(const MatQ& a1, const MatQ& a2, const GameSpec& g) {
  const int n = g.num_strategies();
  if (a1.rows() != n || a1.cols() != n || a2.rows() != n || a2.cols() != n)
    throw std::invalid_argument("equal_rows_equivalent: dimension mismatch");
  MatQ d = a1 - a2;
  for (int a = 0; a < g.num_groups(); ++a)
    for (int b = 0; b < g.num_groups(); ++b) {
      int i0 = g.group_begin(a);
      for (int i = i0 + 1; i < g.group_end(a); ++i)
        for (int j = g.group_begin(b); j < g.group_end(b); ++j)
          if (d(i, j) != d(i0, j)) return false;
    }
  return true;
}

GameSpec restrict_to_face(const GameSpec& g, const std::vector<int>& subset) {
  std::vector<int> new_groups(g.num_groups(), 0);
  for (int i : subset) {
    if (i < 0 || i >= g.num_strategies())
      throw std::invalid_argument("restrict_to_face: strategy out of range");
    new_groups[g.group_of(i)]++;
  }
  for (int a = 0; a < g.num_groups(); ++a)
    if (new_groups[a] == 0)
      throw std::invalid_argument("restrict_to_face: group " + std::to_string(a + 1) +
                                  " has no strategy in the subset");
  MatQ sub((Eigen::Index)subset.size(), (Eigen::Index)subset.size());
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = 0; j < subset.size(); ++j)
      sub((Eigen::Index)i, (Eigen::Index)j) = g.payoff()(subset[i], subset[j]);
  return GameSpec(std::move(new_groups), std::move(sub));
}

bool in_polytope(const GameSpec& g, const VecQ& x) {
  if (x.size() != g.num_strategies()) return false;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] < 0) return false;
  for (int a = 0; a < g.num_groups(); ++a) {
    Rat sum = 0;
    for (int i = g.group_begin(a); i < g.group_end(a); ++i) sum += x[i];
    if (sum != 1) return false;
  }
  return true;
}

VecQ barycenter(const GameSpec& g) {
  VecQ x(g.num_strategies());
  for (int i = 0; i < g.num_strategies(); ++i)
    x[i] = Rat(1, g.groups()[g.group_of(i)]);
  return x;
}

}  // namespace polyrep
