#include "ncps/words.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ncps {

Letter Word::max_letter() const {
  Letter m = 0;
  for (Letter l : letters_) m = std::max(m, l);
  return m;
}

bool Word::is_ordered() const {
  return std::is_sorted(letters_.begin(), letters_.end());
}

Word Word::sorted() const {
  std::vector<Letter> copy = letters_;
  std::sort(copy.begin(), copy.end());
  return Word(std::move(copy));
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

Word operator+(const Word& lhs, const Word& rhs) {
  std::vector<Letter> joined = lhs.letters_;
  joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(joined));
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      letters_.begin(), letters_.end(), other.letters_.begin(), other.letters_.end());
}

bool Embedding::valid() const {
  if (positions.size() != source.length()) return false;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k] >= target.length()) return false;
    if (k > 0 && positions[k] <= positions[k - 1]) return false;
    if (target[positions[k]] != source[k]) return false;
  }
  return true;
}

namespace {

void collect_embeddings(const Word& inner, const Word& outer, std::size_t k,
                        std::size_t from, std::vector<std::size_t>& current,
                        std::vector<Embedding>& out) {
  if (k == inner.length()) {
    out.push_back(Embedding{inner, outer, current});
    return;
  }
  // not enough room left for the remaining letters
  for (std::size_t pos = from; pos + (inner.length() - k) <= outer.length(); ++pos) {
    if (outer[pos] != inner[k]) continue;
    current.push_back(pos);
    collect_embeddings(inner, outer, k + 1, pos + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Embedding> embeddings(const Word& inner, const Word& outer) {
  std::vector<Embedding> out;
  std::vector<std::size_t> current;
  collect_embeddings(inner, outer, 0, 0, current, out);
  return out;
}

std::size_t count_embeddings(const Word& inner, const Word& outer) {
  // subsequence-count recurrence over suffixes
  const std::size_t ni = inner.length(), no = outer.length();
  if (ni > no) return 0;
  std::vector<std::size_t> row(no + 1, 1);  // inner suffix empty
  for (std::size_t i = ni; i-- > 0;) {
    std::vector<std::size_t> next(no + 1, 0);
    for (std::size_t j = no; j-- > 0;) {
      next[j] = next[j + 1];
      if (outer[j] == inner[i]) next[j] += row[j + 1];
    }
    row = std::move(next);
  }
  return row[0];
}

Word delete_along(const Word& word, const Embedding& e) {
  if (e.target != word) throw std::invalid_argument("embedding target mismatch");
  if (!e.valid()) throw std::invalid_argument("invalid embedding");
  std::vector<Letter> rest;
  rest.reserve(word.length() - e.positions.size());
  std::size_t next = 0;
  for (std::size_t pos = 0; pos < word.length(); ++pos) {
    if (next < e.positions.size() && e.positions[next] == pos) {
      ++next;
      continue;
    }
    rest.push_back(word[pos]);
  }
  return Word(std::move(rest));
}

std::vector<Word> words_up_to(unsigned alphabet, unsigned degree) {
  std::vector<Word> out;
  out.emplace_back();
  if (alphabet == 0) return out;
  std::size_t level_begin = 0;
  for (unsigned len = 1; len <= degree; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (Letter l = 1; l <= alphabet; ++l) out.push_back(out[k] + Word{l});
    }
    level_begin = level_end;
  }
  return out;
}

std::string word_str(const Word& word, unsigned even_letters) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < word.length(); ++k) {
    if (k > 0) out += "*";
    Letter l = word[k];
    if (even_letters > 0 && l > even_letters)
      out += "y" + std::to_string(l - even_letters);
    else
      out += "x" + std::to_string(l);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& word) {
  return os << word_str(word);
}

}  // namespace ncps
