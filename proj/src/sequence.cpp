#include "ipf/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ipf/error.hpp"
#include "ipf/semigroup.hpp"

namespace ipf {

int Seq::multiplicity(Element x) const {
  return static_cast<int>(std::count(terms_.begin(), terms_.end(), x));
}

std::map<Element, int> Seq::multiplicities() const {
  std::map<Element, int> out;
  for (Element x : terms_) ++out[x];
  return out;
}

std::vector<Element> Seq::support() const {
  std::vector<Element> out(terms_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Seq Seq::with(Element x) const {
  auto terms = terms_;
  terms.push_back(x);
  return Seq(std::move(terms));
}

Seq Seq::without_one(Element x) const {
  auto terms = terms_;
  auto it = std::find(terms.begin(), terms.end(), x);
  if (it == terms.end())
    throw Error(ErrorCode::InvalidArgument, std::to_string(x) + " is not a term");
  terms.erase(it);
  return Seq(std::move(terms));
}

void Seq::check_against(const FiniteSemigroup& s) const {
  for (Element x : terms_)
    if (!s.contains(x))
      throw Error(ErrorCode::InvalidArgument,
                  "term " + std::to_string(x) + " outside semigroup of order " +
                      std::to_string(s.order()));
}

Seq parse_sequence(std::string_view text) {
  // The first line that is not a comment holds the sequence.
  std::string_view line;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    line = text.substr(pos, end - pos);
    if (line.empty() || line.front() != '#') break;
    line = {};
    pos = end + 1;
  }
  std::vector<Element> terms;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    int v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
    if (ec != std::errc() || ptr != line.data() + j || v < 0)
      throw Error(ErrorCode::Parse,
                  "bad sequence term '" + std::string(line.substr(i, j - i)) + "'");
    terms.push_back(v);
    i = j;
  }
  return Seq(std::move(terms));
}

std::string format_sequence(const Seq& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(t[i]);
  }
  out += '\n';
  return out;
}

Seq load_sequence(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence(buf.str());
}

}  // namespace ipf
