#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metab/module.hpp"
#include "metab/text.hpp"

namespace metab {

struct PresentationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Letter {
  std::string name;
  Int exp;
  bool operator==(const Letter&) const = default;
};

// freely condensed: adjacent letters have distinct names, exponents nonzero
struct GroupWord {
  std::vector<Letter> letters;

  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> ls);
  Int length() const;
  bool empty() const { return letters.empty(); }
  bool operator==(const GroupWord&) const = default;
};

GroupWord operator*(const GroupWord& a, const GroupWord& b);
GroupWord inverse(const GroupWord& w);
GroupWord power(const GroupWord& w, const Int& n);
GroupWord conjugate(const GroupWord& x, const GroupWord& y);   // y^-1 x y
GroupWord commutator(const GroupWord& x, const GroupWord& y);  // x^-1 y^-1 x y
GroupWord letter(const std::string& name, const Int& exp = 1);

struct TamenessDatum {
  std::vector<ModuleElement> centralizer;
  std::vector<ModuleElement> co_centralizer;
};

struct CommutatorEntry {
  int gen;   // module generator index
  int sign;  // [t_i, t_j] = a_gen^sign
};

struct Presentation {
  std::vector<std::string> module_gens;
  std::vector<std::string> free_gens;
  std::vector<std::pair<std::string, long>> torsion_gens;
  std::map<std::pair<int, int>, CommutatorEntry> commutator_table;  // keys i < j over t-generators
  std::vector<GroupWord> relators;
  std::optional<TamenessDatum> tameness;

  std::size_t m() const { return module_gens.size(); }
  std::size_t k() const { return free_gens.size(); }
  std::size_t nt() const { return free_gens.size() + torsion_gens.size(); }
  // t-generators: free ones first, then torsion ones
  std::string t_name(std::size_t i) const;
  long t_order(std::size_t i) const;  // 0 for infinite
  int t_index(const std::string& name) const;
  int module_index(const std::string& name) const;
  RingSpec ring() const;
};

Presentation parse_presentation(const std::string& json_text);
std::string presentation_to_json(const Presentation& p);
void validate_presentation(const Presentation& p);

GroupWord parse_word(const std::string& text, const Presentation& p);
std::string print_word(const GroupWord& w);

std::vector<Int> exponent_sums(const GroupWord& w, const Presentation& p);

}  // namespace metab
