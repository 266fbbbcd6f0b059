#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipf/element_set.hpp"

namespace ipf {

class FiniteSemigroup;

/// An ordered finite sequence of elements (a word in the free monoid over S).
class Seq {
 public:
  Seq() = default;
  explicit Seq(std::vector<Element> terms) : terms_(std::move(terms)) {}
  Seq(std::initializer_list<Element> terms) : terms_(terms) {}

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::span<const Element> terms() const { return terms_; }
  Element operator[](std::size_t i) const { return terms_[i]; }

  int multiplicity(Element x) const;
  // Element -> v_x(T), for x in supp(T).
  std::map<Element, int> multiplicities() const;
  // Ascending, distinct.
  std::vector<Element> support() const;

  // T . x
  Seq with(Element x) const;
  // T x^[-1]; throws InvalidArgument if x is not a term.
  Seq without_one(Element x) const;

  // Throws InvalidArgument if a term lies outside the semigroup.
  void check_against(const FiniteSemigroup& s) const;

  auto operator<=>(const Seq&) const = default;

 private:
  std::vector<Element> terms_;
};

// One line of space-separated indices; an empty line is the empty sequence.
Seq parse_sequence(std::string_view text);
std::string format_sequence(const Seq& t);
Seq load_sequence(const std::string& path);

}  // namespace ipf
