#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "c2lat/perm.hpp"

namespace c2lat {

// Letters are signed 1-based generator indices: k is generator k, -k its
// inverse.
using Letter = int;
using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word power(const Word& w, long long k);
Word concat(const Word& u, const Word& v);
// Free reduction (cancels adjacent x x^-1).
Word reduce(const Word& w);

struct Generator {
  std::string name;
  char side = 0;  // 'a', 'b', or 0 when unassigned
};

struct FinPresentation {
  std::string name;
  std::vector<Generator> generators;
  std::vector<Word> relators;
  // Alternative readings of the source data, if any, and the one in use.
  std::vector<std::string> readings;
  std::string reading;

  std::size_t rank() const { return generators.size(); }
  std::vector<std::string> generator_names() const;
  std::size_t index_of(std::string_view gen) const;  // 0-based, throws if unknown
  // Checks that relators use declared generators and, with `sided`, that
  // both sides are nonempty and every generator is sided.
  void validate(bool sided) const;
  std::string format_word(const Word& w) const;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t line, const std::string& file = {})
      : std::runtime_error((file.empty() ? "" : file + ": ") + "line " + std::to_string(line) + ": " + message),
        line(line),
        message(message) {}
  std::size_t line;
  std::string message;
};

// Token grammar: `g`, `g^k` (k may be negative), `( ... )^k`.
Word parse_word(std::string_view text, const std::vector<std::string>& names);
std::string format_word(const Word& w, const std::vector<std::string>& names);

// Parses the data-file format. An empty `reading` selects the primary one.
FinPresentation parse_presentation(std::string_view text, std::string_view reading = {});
FinPresentation load_presentation(const std::filesystem::path& file, std::string_view reading = {});

// Directory holding the bundled presentation files.
std::filesystem::path data_dir();
void set_data_dir(std::filesystem::path dir);

// Library member L_i, i in 1..35.
FinPresentation library_presentation(int i, std::string_view reading = {});
// Model edge group by file name: "C4", "C2xC2", "C6", "S3".
FinPresentation model_presentation(std::string_view name);

// ---------------------------------------------------------------------------
// Coset enumeration

struct CosetLimitExceeded : std::runtime_error {
  explicit CosetLimitExceeded(std::size_t limit)
      : std::runtime_error("coset enumeration exceeded " + std::to_string(limit) + " cosets") {}
};

// Complete coset table. Column 2k is generator k, column 2k+1 its inverse.
struct CosetTable {
  std::size_t num_gens = 0;
  std::size_t num_cosets = 0;
  std::vector<std::int32_t> table;
  bool complete = false;
  std::size_t defined = 0;  // total cosets defined during the run

  std::int32_t act(std::size_t coset, Letter x) const {
    std::size_t col = x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
    return table[coset * 2 * num_gens + col];
  }
  std::size_t trace(std::size_t coset, const Word& w) const;
  // Every entry defined, generator columns are permutations, relators close
  // at every coset.
  bool verify(const FinPresentation& p) const;
};

constexpr std::size_t kDefaultMaxCosets = std::size_t{1} << 16;

// HLT enumeration with lookahead over the subgroup generated by `subgroup`.
CosetTable todd_coxeter(const FinPresentation& p, const std::vector<Word>& subgroup,
                        std::size_t max_cosets = kDefaultMaxCosets);

// Right-regular permutation representation; generator i maps to generator i.
PermGroup regular_representation(const FinPresentation& p, std::size_t max_cosets = kDefaultMaxCosets);

// Value of a word in a permutation group given by images of the generators.
Permutation evaluate(const Word& w, const std::vector<Permutation>& gens);

struct EdgeSubgroups {
  PermGroup a;
  PermGroup b;
};
// Subgroups generated by the a-side and b-side generator images.
EdgeSubgroups edge_subgroups(const FinPresentation& p, const PermGroup& g);

}  // namespace c2lat
