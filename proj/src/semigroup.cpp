#include "ipf/semigroup.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ipf/error.hpp"

namespace ipf {

namespace {

constexpr int kMaxOrder = 1 << 14;

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(int order, std::vector<Element> table)
    : order_(order), table_(std::move(table)), idempotents_(static_cast<std::size_t>(order)) {
  for (Element e = 0; e < order_; ++e)
    if (mul(e, e) == e) idempotents_.insert(e);

  commutative_ = true;
  for (Element a = 0; a < order_ && commutative_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) {
        commutative_ = false;
        break;
      }

  auto find_two_sided = [&](auto&& pred) -> std::optional<Element> {
    for (Element z = 0; z < order_; ++z) {
      bool ok = true;
      for (Element x = 0; x < order_ && ok; ++x) ok = pred(z, x);
      if (ok) return z;
    }
    return std::nullopt;
  };
  zero_ = find_two_sided([&](Element z, Element x) { return mul(z, x) == z && mul(x, z) == z; });
  identity_ =
      find_two_sided([&](Element u, Element x) { return mul(u, x) == x && mul(x, u) == x; });
}

FiniteSemigroup FiniteSemigroup::validate(int order, std::span<const int> cells) {
  if (order < 1 || order > kMaxOrder)
    throw Error(ErrorCode::InvalidArgument, "order must lie in [1, " +
                                                std::to_string(kMaxOrder) + "], got " +
                                                std::to_string(order));
  const auto n = static_cast<std::size_t>(order);
  if (cells.size() != n * n)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n * n) +
                                                " table cells, got " +
                                                std::to_string(cells.size()));
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i] < 0 || cells[i] >= order)
      throw Error(ErrorCode::NotClosed, "cell (" + std::to_string(i / n) + "," +
                                            std::to_string(i % n) + ") = " +
                                            std::to_string(cells[i]) + " is outside [0, " +
                                            std::to_string(order) + ")");

  std::vector<Element> table(cells.begin(), cells.end());
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int ab = at(a, b);
      for (int c = 0; c < order; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          throw Error(ErrorCode::NotAssociative, triple_str(a, b, c));
    }
  return FiniteSemigroup(order, std::move(table));
}

FiniteSemigroup FiniteSemigroup::validate(const std::vector<std::vector<int>>& rows) {
  const int order = static_cast<int>(rows.size());
  std::vector<int> cells;
  cells.reserve(rows.size() * rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(r) + " has " +
                                                  std::to_string(rows[r].size()) +
                                                  " entries, expected " +
                                                  std::to_string(rows.size()));
    cells.insert(cells.end(), rows[r].begin(), rows[r].end());
  }
  return validate(order, cells);
}

Element CyclicData::power(long long k) const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "powers start at 1");
  const auto top = static_cast<long long>(powers.size());
  if (k <= top) return powers[static_cast<std::size_t>(k - 1)];
  const long long reduced = index + (k - index) % period;
  return powers[static_cast<std::size_t>(reduced - 1)];
}

std::vector<Element> idempotents(const FiniteSemigroup& s) {
  return s.idempotent_set().elements();
}

bool is_commutative(const FiniteSemigroup& s) { return s.commutative(); }

std::optional<Element> zero_element(const FiniteSemigroup& s) { return s.zero(); }

ElementSet generated_subsemigroup(const FiniteSemigroup& s, const ElementSet& generators) {
  if (generators.empty())
    throw Error(ErrorCode::EmptyGeneratorSet, "generator set must be nonempty");
  ElementSet closure = generators;
  std::vector<Element> frontier = generators.elements();
  std::vector<Element> members = frontier;
  // Every new element is multiplied against every member on both sides.
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element a : frontier) {
      const std::size_t count = members.size();
      for (std::size_t i = 0; i < count; ++i) {
        for (Element p : {s.mul(a, members[i]), s.mul(members[i], a)}) {
          if (!closure.contains(p)) {
            closure.insert(p);
            members.push_back(p);
            next.push_back(p);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return closure;
}

CyclicData cyclic_data(const FiniteSemigroup& s, Element x) {
  if (!s.contains(x)) throw Error(ErrorCode::InvalidArgument, "element out of range");
  std::vector<int> first_seen(static_cast<std::size_t>(s.order()), 0);
  CyclicData data;
  Element p = x;
  for (int k = 1;; ++k) {
    if (first_seen[p] != 0) {
      data.index = first_seen[p];
      data.period = k - first_seen[p];
      return data;
    }
    first_seen[p] = k;
    data.powers.push_back(p);
    p = s.mul(p, x);
  }
}

Element unique_cycle_idempotent(const FiniteSemigroup& s, Element x) {
  const CyclicData data = cyclic_data(s, x);
  const int top = data.index + data.period - 1;
  int ell = (data.index + data.period - 1) / data.period * data.period;
  if (ell < data.index)
    throw Error(ErrorCode::Internal, "no multiple of the period in the cycle");
  const Element e = data.powers[static_cast<std::size_t>(ell - 1)];
  for (int k = 1; k <= top; ++k) {
    const Element pk = data.powers[static_cast<std::size_t>(k - 1)];
    if (s.is_idempotent(pk) != (k == ell))
      throw Error(ErrorCode::Internal, "cycle idempotent is not unique");
  }
  return e;
}

FiniteSemigroup monogenic(int index, int period) {
  if (index < 1 || period < 1)
    throw Error(ErrorCode::InvalidParameters, "monogenic requires index >= 1 and period >= 1");
  const int m = index + period - 1;
  if (m > kMaxOrder) throw Error(ErrorCode::InvalidParameters, "monogenic semigroup too large");
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(m) * m);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      const int sum = a + b;
      const int k = sum <= m ? sum : index + (sum - index) % period;
      cells.push_back(k - 1);
    }
  return FiniteSemigroup::validate(m, cells);
}

ElementSet right_translate(const FiniteSemigroup& s, const ElementSet& set, Element x) {
  ElementSet out(set.universe());
  set.for_each([&](Element a) { out.insert(s.mul(a, x)); });
  return out;
}

Subsemigroup restrict_to(const FiniteSemigroup& s, const ElementSet& subset) {
  const std::vector<Element> members = subset.elements();
  if (members.empty()) throw Error(ErrorCode::InvalidArgument, "empty subset");
  std::vector<int> local(static_cast<std::size_t>(s.order()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  std::vector<int> cells;
  cells.reserve(members.size() * members.size());
  for (Element a : members)
    for (Element b : members) {
      const int p = local[s.mul(a, b)];
      if (p < 0) throw Error(ErrorCode::InvalidArgument, "subset is not closed");
      cells.push_back(p);
    }
  return {FiniteSemigroup::validate(static_cast<int>(members.size()), cells), members};
}

namespace {

std::vector<long long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long v = 0;
    const auto* first = line.data() + i;
    const auto* last = line.data() + j;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad integer '" +
                                        std::string(first, last) + "'");
    out.push_back(v);
    i = j;
  }
  return out;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

FiniteSemigroup parse_table(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<long long>>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (!line.empty() && line.front() != '#' && !is_blank(line))
      lines.emplace_back(line_no, parse_ints(line, line_no));
    pos = end + 1;
  }
  if (lines.empty()) throw Error(ErrorCode::Parse, "missing order line");
  if (lines[0].second.size() != 1)
    throw Error(ErrorCode::Parse, "line " + std::to_string(lines[0].first) +
                                      ": first line must hold the order only");
  const long long n = lines[0].second[0];
  if (n < 1 || n > kMaxOrder)
    throw Error(ErrorCode::Parse, "order " + std::to_string(n) + " out of range");
  if (lines.size() - 1 != static_cast<std::size_t>(n))
    throw Error(ErrorCode::Parse, "expected " + std::to_string(n) + " rows, found " +
                                      std::to_string(lines.size() - 1));
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(n * n));
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& [no, row] = lines[r];
    if (row.size() != static_cast<std::size_t>(n))
      throw Error(ErrorCode::Parse, "line " + std::to_string(no) + ": expected " +
                                        std::to_string(n) + " entries, found " +
                                        std::to_string(row.size()));
    for (long long v : row) {
      if (v < -1 || v > kMaxOrder) v = -1;  // out of range either way; validate names the cell
      cells.push_back(static_cast<int>(v));
    }
  }
  return FiniteSemigroup::validate(static_cast<int>(n), cells);
}

std::string format_table(const FiniteSemigroup& s) {
  std::string out = std::to_string(s.order()) + "\n";
  const auto n = static_cast<std::size_t>(s.order());
  const auto cells = s.cells();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b) out += ' ';
      out += std::to_string(cells[a * n + b]);
    }
    out += '\n';
  }
  return out;
}

FiniteSemigroup load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

}  // namespace ipf
