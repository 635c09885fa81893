#include "dcn/dcell.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>

#include "dcn/errors.hpp"

namespace dcn {

namespace {

void check_params(std::size_t n) {
  if (n < 2) throw RangeError("DCell needs n >= 2, got n=" + std::to_string(n));
}

// Radix of digit position i (0 = least significant).
std::uint64_t radix(const std::vector<std::uint64_t>& t, std::size_t i) { return i == 0 ? t[0] : t[i - 1] + 1; }

}  // namespace

std::vector<std::uint64_t> t_table(std::size_t m, std::size_t n) {
  check_params(n);
  std::vector<std::uint64_t> t{n};
  for (std::size_t level = 1; level <= m; ++level) {
    std::uint64_t prev = t.back();
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(prev, prev + 1, &next)) {
      throw BudgetError("t_{m,n} overflows 64 bits at level " + std::to_string(level) + " (m=" + std::to_string(m) +
                        ", n=" + std::to_string(n) + ")");
    }
    t.push_back(next);
  }
  return t;
}

std::uint64_t t_size(std::size_t m, std::size_t n) { return t_table(m, n).back(); }

std::string format_dcell_label(const DCellLabel& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(digits[i]);
  }
  return out;
}

DCellLabel parse_dcell_label(std::string_view text, const DCellParams& p) {
  auto t = t_table(p.m, p.n);
  DCellLabel digits;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    auto part = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    std::uint64_t d = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), d);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw InvalidArgument("bad DCell label '" + std::string(text) + "'");
    }
    digits.push_back(d);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (digits.size() != p.m + 1) {
    throw InvalidArgument("DCell label '" + std::string(text) + "' needs " + std::to_string(p.m + 1) + " digits");
  }
  for (std::size_t i = 0; i <= p.m; ++i) {
    if (digits[p.m - i] >= radix(t, i)) {
      throw InvalidArgument("DCell label '" + std::string(text) + "' has digit x_" + std::to_string(i) +
                            " out of range");
    }
  }
  return digits;
}

std::uint64_t dcell_index(const DCellLabel& digits, const DCellParams& p) {
  auto t = t_table(p.m, p.n);
  if (digits.size() != p.m + 1) throw InvalidArgument("DCell label has wrong digit count");
  std::uint64_t index = digits[p.m];
  for (std::size_t i = 1; i <= p.m; ++i) index += digits[p.m - i] * t[i - 1];
  return index;
}

DCellLabel dcell_label(std::uint64_t index, const DCellParams& p) {
  auto t = t_table(p.m, p.n);
  if (index >= t[p.m]) throw InvalidArgument("DCell index " + std::to_string(index) + " out of range");
  DCellLabel digits(p.m + 1);
  for (std::size_t i = p.m; i >= 1; --i) {
    digits[p.m - i] = index / t[i - 1];
    index %= t[i - 1];
  }
  digits[p.m] = index;
  return digits;
}

DCellLabel outside_neighbor(const DCellLabel& label, const DCellParams& p) {
  if (p.m == 0) throw RangeError("D(0,n) has no outside neighbour");
  auto t = t_table(p.m, p.n);
  if (label.size() != p.m + 1) throw InvalidArgument("DCell label has wrong digit count");
  // Copy index a and position i of the vertex inside its copy of D(m-1,n).
  const std::uint64_t a = label[0];
  DCellLabel low(label.begin() + 1, label.end());
  const std::uint64_t i = dcell_index(low, {p.m - 1, p.n});
  std::uint64_t copy = 0;
  std::uint64_t pos = 0;
  if (i >= a) {
    copy = i + 1;
    pos = a;
  } else {
    copy = i;
    pos = a - 1;
  }
  DCellLabel out{copy};
  auto rest = dcell_label(pos, {p.m - 1, p.n});
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Graph build_dcell(std::size_t m, std::size_t n, std::size_t vertex_cap) {
  auto t = t_table(m, n);
  if (t[m] > vertex_cap) {
    throw BudgetError("D(" + std::to_string(m) + "," + std::to_string(n) + ") has " + std::to_string(t[m]) +
                      " servers, above the cap of " + std::to_string(vertex_cap));
  }
  const DCellParams p{m, n};
  const auto total = static_cast<VertexId>(t[m]);
  std::vector<std::string> labels;
  labels.reserve(total);
  for (VertexId v = 0; v < total; ++v) labels.push_back(format_dcell_label(dcell_label(v, p)));

  std::vector<Edge> edges;
  // Level 0: every block of n consecutive ids is a K_n.
  for (VertexId base = 0; base < total; base += static_cast<VertexId>(n)) {
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) edges.emplace_back(base + a, base + b);
    }
  }
  // Level l: inside each block of t_l ids, copy a and copy b (a < b) of
  // D(l-1,n) are joined by local position b-1 in copy a and a in copy b.
  for (std::size_t level = 1; level <= m; ++level) {
    const std::uint64_t sub = t[level - 1];
    const std::uint64_t block = t[level];
    for (std::uint64_t base = 0; base < total; base += block) {
      for (std::uint64_t a = 0; a <= sub; ++a) {
        for (std::uint64_t b = a + 1; b <= sub; ++b) {
          edges.emplace_back(static_cast<VertexId>(base + a * sub + (b - 1)),
                             static_cast<VertexId>(base + b * sub + a));
        }
      }
    }
  }
  return Graph(std::move(labels), std::move(edges));
}

bool dcell_growth_bound_holds(std::size_t m, std::size_t n) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  check_params(n);
  cpp_int t = n;
  for (std::size_t i = 1; i <= m; ++i) t = t * (t + 1);
  cpp_rational base = cpp_rational(2 * n + 1, 2);
  cpp_rational power = base;
  for (std::size_t i = 0; i < m; ++i) power *= power;
  return cpp_rational(t) >= power - cpp_rational(1, 2);
}

}  // namespace dcn
