#ifndef SUBSHIFT_TYPES_HPP_
#define SUBSHIFT_TYPES_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace subshift {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Letter = std::uint16_t;

class SubshiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EnumerationTooLarge : public SubshiftError {
 public:
  explicit EnumerationTooLarge(BigInt count)
      : SubshiftError("enumeration too large: " + count.str()), count_(std::move(count)) {}
  const BigInt& count() const { return count_; }

 private:
  BigInt count_;
};

// Letters are 0..size-1 and ordered by their integer value; labels are display-only.
class Alphabet {
 public:
  explicit Alphabet(int size) : size_(size) {
    if (size < 1) throw SubshiftError("alphabet size must be >= 1");
  }
  Alphabet(int size, std::vector<std::string> labels) : Alphabet(size) {
    if (static_cast<int>(labels.size()) != size)
      throw SubshiftError("label count does not match alphabet size");
    labels_ = std::move(labels);
  }

  int size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(Letter a) const {
    return labels_.empty() ? std::to_string(a) : labels_[a];
  }
  bool operator==(const Alphabet& o) const { return size_ == o.size_; }

 private:
  int size_;
  std::vector<std::string> labels_;
};

// Finite word over an alphabet (letters stored as raw values; the alphabet is
// carried separately by whoever owns the word).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> ls) : letters_(ls) {}

  // Parses a digit string like "0110"; only valid for alphabets of size <= 10.
  static Word of(const std::string& digits) {
    std::vector<Letter> ls;
    ls.reserve(digits.size());
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw SubshiftError("bad digit in word literal");
      ls.push_back(static_cast<Letter>(ch - '0'));
    }
    return Word(std::move(ls));
  }

  static Word repeated(Letter a, int n) { return Word(std::vector<Letter>(n, a)); }

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](int i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter a) { letters_.push_back(a); }
  void push_front(Letter a) { letters_.insert(letters_.begin(), a); }
  void pop_back() { letters_.pop_back(); }

  Word prefix(int n) const {
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
  }
  Word suffix(int n) const {
    return Word(std::vector<Letter>(letters_.end() - n, letters_.end()));
  }
  Word subword(int pos, int len) const {
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
  }

  bool has_prefix(const Word& p) const {
    if (p.size() > size()) return false;
    for (int i = 0; i < p.size(); ++i)
      if (letters_[i] != p[i]) return false;
    return true;
  }
  bool has_suffix(const Word& s) const {
    if (s.size() > size()) return false;
    int off = size() - s.size();
    for (int i = 0; i < s.size(); ++i)
      if (letters_[off + i] != s[i]) return false;
    return true;
  }
  bool contains(const Word& u) const {
    if (u.empty()) return true;
    for (int pos = 0; pos + u.size() <= size(); ++pos) {
      bool hit = true;
      for (int i = 0; i < u.size(); ++i)
        if (letters_[pos + i] != u[i]) { hit = false; break; }
      if (hit) return true;
    }
    return false;
  }

  Word operator+(const Word& o) const {
    std::vector<Letter> ls = letters_;
    ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(ls));
  }

  // Lexicographic; a proper prefix sorts before its extensions.
  auto operator<=>(const Word& o) const = default;

  std::string str(const Alphabet* alphabet = nullptr) const {
    bool compact = (alphabet == nullptr || (alphabet->size() <= 10 && !alphabet->has_labels()));
    std::string out;
    for (int i = 0; i < size(); ++i) {
      if (compact) {
        out += static_cast<char>('0' + letters_[i]);
      } else {
        if (i) out += '.';
        out += alphabet->label(letters_[i]);
      }
    }
    return out;
  }

 private:
  std::vector<Letter> letters_;
};

}  // namespace subshift

#endif  // SUBSHIFT_TYPES_HPP_
