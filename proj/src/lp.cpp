#include "chessplex/lp.hpp"

#include <cctype>

#include "chessplex/error.hpp"

namespace chessplex {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return InvalidInput("malformed rational '" + text + "'"); };
  auto integer = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw bad();
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
    }
    return mpz_class(s[0] == '+' ? s.substr(1) : s);
  };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const mpz_class num = integer(text.substr(0, slash));
    const mpz_class den = integer(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const bool negative = !text.empty() && text[0] == '-';
    const std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    const std::string whole = text.substr(start, dot - start);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac[0] == '-' || frac[0] == '+') throw bad();
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) throw bad();
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational q(integer(whole.empty() ? "0" : whole) * scale + integer(frac), scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(integer(text));
}

std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& a,
                                                    const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  const std::size_t vars = rows == 0 ? 0 : a.front().size();
  const std::size_t cols = vars + rows;
  // Tableau with artificial columns and the right-hand side last.
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != vars) throw InvalidInput("ragged constraint matrix");
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][vars + i] = 1;
    t[i][cols] = flip ? Rational(-b[i]) : b[i];
  }
  std::vector<Rational> cost(cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) cost[j] -= t[i][j];
    cost[cols] -= t[i][cols];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = vars + i;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave == rows) break;  // unbounded; cannot happen for phase one
    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
      }
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
  }
  if (cost[cols] != 0) return std::nullopt;
  std::vector<Rational> x(vars);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < vars) x[basis[i]] = t[i][cols];
  }
  return x;
}

std::optional<HullIntersection> hulls_intersect(
    const std::vector<std::vector<RationalPoint>>& point_sets) {
  if (point_sets.empty()) throw InvalidInput("no point sets");
  const std::size_t d = point_sets.front().empty() ? 0 : point_sets.front().front().size();
  std::size_t vars = 0;
  std::vector<std::size_t> offset;
  for (const auto& set : point_sets) {
    if (set.empty()) throw InvalidInput("empty point set");
    for (const auto& p : set) {
      if (p.size() != d) throw InvalidInput("points of different dimensions");
    }
    offset.push_back(vars);
    vars += set.size();
  }
  const std::size_t r = point_sets.size();
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rational> row(vars);
    for (std::size_t j = 0; j < point_sets[i].size(); ++j) row[offset[i] + j] = 1;
    a.push_back(std::move(row));
    b.emplace_back(1);
  }
  for (std::size_t i = 1; i < r; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<Rational> row(vars);
      for (std::size_t j = 0; j < point_sets[0].size(); ++j) row[j] = point_sets[0][j][c];
      for (std::size_t j = 0; j < point_sets[i].size(); ++j) {
        row[offset[i] + j] = -point_sets[i][j][c];
      }
      a.push_back(std::move(row));
      b.emplace_back(0);
    }
  }
  const auto x = feasible_point(a, b);
  if (!x) return std::nullopt;
  HullIntersection out;
  out.point.assign(d, Rational(0));
  for (std::size_t i = 0; i < r; ++i) {
    out.weights.emplace_back(x->begin() + offset[i],
                             x->begin() + offset[i] + point_sets[i].size());
  }
  for (std::size_t j = 0; j < point_sets[0].size(); ++j) {
    for (std::size_t c = 0; c < d; ++c) out.point[c] += out.weights[0][j] * point_sets[0][j][c];
  }
  return out;
}

}  // namespace chessplex
