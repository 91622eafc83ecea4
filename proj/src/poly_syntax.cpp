#include <nblab/error.hpp>
#include <nblab/poly_syntax.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>

namespace nblab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  ParsedPolynomial product() {
    require(!s_.empty(), "empty polynomial");
    ParsedPolynomial out;
    out.poly = CirclePolynomial({GaussianRational(1)});
    bool circle = true;
    // A bare linear factor such as "1-z/2" is the whole input.
    if (s_.front() != '(' && s_ != "1" && s_.front() != 'z') {
      const GaussianRational a = linear();
      finish();
      add_linear(out, a, 1, circle);
      out.unit_roots = circle;
      if (!circle) out.roots.clear();
      return out;
    }
    while (pos_ < s_.size()) {
      if (peek() == '*') ++pos_;
      if (peek() == '(') {
        ++pos_;
        const GaussianRational a = linear();
        expect(')');
        add_linear(out, a, exponent(), circle);
      } else if (peek() == 'z') {
        ++pos_;
        const int m = exponent();
        out.z_power += m;
        std::vector<GaussianRational> c(static_cast<std::size_t>(m) + 1);
        c.back() = GaussianRational(1);
        out.poly = out.poly * CirclePolynomial(std::move(c));
      } else if (peek() == '1') {
        ++pos_;
      } else {
        fail("unexpected character");
      }
    }
    out.unit_roots = circle && !out.roots.empty();
    if (!circle) out.roots.clear();
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::InvalidArgument,
                "polynomial syntax: " + why + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void finish() const {
    if (pos_ != s_.size()) fail("trailing input");
  }

  long integer() {
    const char* b = s_.data() + pos_;
    long v = 0;
    auto [ptr, ec] = std::from_chars(b, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == b) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - b);
    return v;
  }

  Rational rational() {
    const long num = integer();
    long den = 1;
    if (peek() == '/') {
      ++pos_;
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    return make_rational(num, den);
  }

  int exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    const long m = integer();
    if (m < 1 || m > 1000) fail("exponent must lie in 1..1000");
    return static_cast<int>(m);
  }

  // [rational '*'] 'i' or a bare rational; `negative` flips the sign.
  GaussianRational term(bool negative) {
    GaussianRational v;
    if (peek() == 'i') {
      ++pos_;
      v = GaussianRational(0, 1);
    } else {
      const Rational r = rational();
      if (peek() == '*' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'i') {
        pos_ += 2;
        v = GaussianRational(0, r);
      } else {
        v = GaussianRational(r);
      }
    }
    return negative ? -v : v;
  }

  GaussianRational coefficient() {
    if (peek() == '(') {
      ++pos_;
      bool neg = false;
      if (peek() == '-' || peek() == '+') neg = s_[pos_++] == '-';
      GaussianRational v = term(neg);
      while (peek() == '+' || peek() == '-') {
        neg = s_[pos_++] == '-';
        v += term(neg);
      }
      expect(')');
      return v;
    }
    return term(false);
  }

  // 1 +/- [coef [*]] z [/ int]; returns a with the factor 1 - a z.
  GaussianRational linear() {
    expect('1');
    if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
    const bool minus = s_[pos_++] == '-';
    GaussianRational c(1);
    if (peek() != 'z') {
      c = coefficient();
      if (peek() == '*') ++pos_;
    }
    expect('z');
    if (peek() == '/') {
      ++pos_;
      const long d = integer();
      if (d == 0) fail("zero denominator");
      c = c * GaussianRational(make_rational(1, d));
    }
    if (c.is_zero()) fail("zero coefficient");
    return minus ? c : -c;
  }

  static void add_linear(ParsedPolynomial& out, const GaussianRational& a, int m, bool& circle) {
    const CirclePolynomial factor({GaussianRational(1), -a});
    for (int k = 0; k < m; ++k) out.poly = out.poly * factor;
    if (a.norm() != 1) {
      circle = false;
      return;
    }
    const GaussianRational alpha = a.conj();
    auto it = std::find_if(out.roots.begin(), out.roots.end(), [&](const RootSpec& r) { return r.alpha == alpha; });
    if (it != out.roots.end())
      it->multiplicity += m;
    else
      out.roots.push_back({alpha, m});
  }

  std::string s_;
  std::size_t pos_ = 0;
};

template <class T>
std::vector<T> parse_list(std::string_view text) {
  std::vector<T> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    T v{};
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw Error(ErrorKind::InvalidArgument, "bad list entry \"" + std::string(item) + "\"");
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

}  // namespace

ParsedPolynomial parse_polynomial(std::string_view text) { return Parser(text).product(); }

std::vector<long> parse_long_list(std::string_view text) { return parse_list<long>(text); }

std::vector<double> parse_double_list(std::string_view text) { return parse_list<double>(text); }

}  // namespace nblab
