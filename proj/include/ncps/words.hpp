#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace ncps {

/// Variable index, 1-based. Letter k stands for the k-th variable.
using Letter = unsigned;

/// A word over the alphabet {1,...,n}: the multi-index of a noncommutative
/// monomial x_{i_1}...x_{i_k}. The empty word is the unit monomial.
///
/// Words are immutable values. The total order is graded-lexicographic:
/// shorter words first, equal lengths compared letterwise. This order is the
/// canonical basis order used for serialization and pivoting everywhere.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Largest letter occurring; 0 for the empty word.
  Letter max_letter() const;

  /// True iff letters are nondecreasing (the empty word is ordered).
  bool is_ordered() const;

  /// Letters sorted nondecreasingly: the ordered word with the same multiset.
  Word sorted() const;

  Word reversed() const;

  friend Word operator+(const Word& lhs, const Word& rhs);  // concatenation

  bool operator==(const Word& other) const = default;
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  std::vector<Letter> letters_;
};

/// An order-preserving injection of `source` into `target`: positions is a
/// strictly increasing list of 0-based indices into target with
/// target[positions[k]] == source[k].
struct Embedding {
  Word source;
  Word target;
  std::vector<std::size_t> positions;

  bool valid() const;
};

/// All embeddings of `inner` into `outer`, in lexicographic position order.
/// Empty result iff inner does not embed; the empty word has exactly one
/// (empty) embedding into any word.
std::vector<Embedding> embeddings(const Word& inner, const Word& outer);

/// Number of embeddings of `inner` into `outer`.
std::size_t count_embeddings(const Word& inner, const Word& outer);

/// Deletes the embedded positions from e.target; requires e.target == word.
Word delete_along(const Word& word, const Embedding& e);

/// All words of length <= degree over {1,...,alphabet} in graded-lex order.
std::vector<Word> words_up_to(unsigned alphabet, unsigned degree);

/// Prints as "x1*x2*x1"; the empty word prints as "1". When even_letters is
/// nonzero, letters above it print as y1, y2, ... (supermanifold charts).
std::string word_str(const Word& word, unsigned even_letters = 0);

std::ostream& operator<<(std::ostream& os, const Word& word);

}  // namespace ncps
