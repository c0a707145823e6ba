#include "pegboard/word.hpp"

#include "pegboard/error.hpp"

#include <algorithm>

namespace pegboard {

char to_char(Letter l) {
  static constexpr char kChars[] = {'x', 'X', 'y', 'Y'};
  return kChars[static_cast<int>(l)];
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'x': return Letter::x;
    case 'X': return Letter::X;
    case 'y': return Letter::y;
    case 'Y': return Letter::Y;
    default: throw Error(ErrorCode::Parse, std::string("bad letter '") + c + "'");
  }
}

Word parse_word(std::string_view text) {
  Word w;
  for (char c : text) {
    if (c == ' ' || c == ',') continue;
    w.push_back(letter_from_char(c));
  }
  return w;
}

std::string to_string(std::span<const Letter> w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s.push_back(to_char(l));
  return s;
}

Word inverse(std::span<const Letter> w) {
  Word out(w.size());
  std::transform(w.rbegin(), w.rend(), out.begin(), [](Letter l) { return inverse(l); });
  return out;
}

Word free_reduce(std::span<const Letter> w) {
  Word st;
  st.reserve(w.size());
  for (Letter l : w) {
    if (!st.empty() && st.back() == inverse(l)) {
      st.pop_back();
    } else {
      st.push_back(l);
    }
  }
  return st;
}

Word cyclic_reduce(std::span<const Letter> w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == inverse(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word rotate(std::span<const Letter> w, std::size_t k) {
  Word out(w.begin(), w.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return out;
}

Word least_rotation(std::span<const Letter> w) {
  // Booth's algorithm.
  const std::size_t n = w.size();
  if (n == 0) return {};
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return w[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    Letter sj = at(j);
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return rotate(w, k);
}

bool is_cyclically_reduced(std::span<const Letter> w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.size() >= 2 && w[(i + 1) % w.size()] == inverse(w[i])) return false;
  }
  return true;
}

LatticeVector abelianize(std::span<const Letter> w) {
  LatticeVector h;
  for (Letter l : w) h += step_of(l);
  return h;
}

Word involution_image(std::span<const Letter> w) {
  Word out(w.size());
  std::transform(w.begin(), w.end(), out.begin(), [](Letter l) { return inverse(l); });
  return out;
}

std::pair<Word, std::int64_t> primitive_root(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return {{}, 1};
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d)), static_cast<std::int64_t>(n / d)};
  }
  return {Word(w.begin(), w.end()), 1};
}

CyclicWord CyclicWord::from(std::span<const Letter> raw) {
  Word r = cyclic_reduce(raw);
  CyclicWord cw;
  if (r.empty()) return cw;
  Word a = least_rotation(r);
  Word b = least_rotation(inverse(r));
  cw.letters_ = std::min(a, b);
  return cw;
}

Word CyclicWord::oriented() const {
  LatticeVector h = homology();
  if (h.dx > 0 || (h.dx == 0 && h.dy >= 0)) return letters_;
  return least_rotation(inverse(letters_));
}

Automorphism::Automorphism(Word image_x, Word image_y) {
  images_[static_cast<int>(Letter::x)] = free_reduce(image_x);
  images_[static_cast<int>(Letter::y)] = free_reduce(image_y);
  images_[static_cast<int>(Letter::X)] = inverse(images_[static_cast<int>(Letter::x)]);
  images_[static_cast<int>(Letter::Y)] = inverse(images_[static_cast<int>(Letter::y)]);
}

Automorphism Automorphism::identity() { return {{Letter::x}, {Letter::y}}; }

const Word& Automorphism::image(Letter l) const { return images_[static_cast<int>(l)]; }

Word Automorphism::apply(std::span<const Letter> w) const {
  Word out;
  for (Letter l : w) {
    const Word& im = image(l);
    out.insert(out.end(), im.begin(), im.end());
  }
  return free_reduce(out);
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  return {apply(other.image(Letter::x)), apply(other.image(Letter::y))};
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// T^q = [[1, q], [0, 1]]: x -> x, y -> x^q y.
Automorphism shear(std::int64_t q) {
  Word y_image;
  Letter l = q >= 0 ? Letter::x : Letter::X;
  for (std::int64_t i = 0; i < (q >= 0 ? q : -q); ++i) y_image.push_back(l);
  y_image.push_back(Letter::y);
  return {{Letter::x}, y_image};
}

// S = [[0, -1], [1, 0]]: x -> y, y -> X.
Automorphism quarter_turn() { return {{Letter::y}, {Letter::X}}; }

}  // namespace

Automorphism Automorphism::realizing(const MCGMatrix& m) {
  // Orientation-reversing part: m = m' R with R = diag(1, -1).
  Automorphism tail = identity();
  MCGMatrix n = m;
  if (m.determinant() == -1) {
    tail = Automorphism({Letter::x}, {Letter::Y});
    n = m * MCGMatrix(1, 0, 0, -1);
  }
  // Reduce n to upper-triangular form by left multiplication, recording
  // the factors: n = T^{q1} S T^{q2} S ... N.
  Automorphism head = identity();
  std::int64_t a = n.a(), b = n.b(), c = n.c(), d = n.d();
  while (c != 0) {
    std::int64_t q = floor_div(a, c);
    // T^{-q} n
    a -= q * c;
    b -= q * d;
    head = head.compose(shear(q));
    // S^{-1} n = [[0, 1], [-1, 0]] n
    std::int64_t na = c, nb = d, nc = -a, nd = -b;
    a = na; b = nb; c = nc; d = nd;
    head = head.compose(quarter_turn());
  }
  // [[a, b], [0, d]] with a = d = +-1 equals diag(a, a) T^{b/a}.
  Automorphism last = shear(b * a);
  if (a == -1) last = Automorphism({Letter::X}, {Letter::Y}).compose(last);
  return head.compose(last).compose(tail);
}

}  // namespace pegboard
