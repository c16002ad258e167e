#include "pmv/rational.hpp"

#include <stdexcept>

namespace pmv {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // mpq_class(string) accepts whitespace and bases we don't want; validate
  // the shape ourselves: -?digits(/digits)?
  auto digits = [](const std::string& t, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  size_t start = (s[0] == '-') ? 1 : 0;
  size_t slash = s.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = digits(s, start, s.size());
  } else {
    ok = digits(s, start, slash) && digits(s, slash + 1, s.size());
  }
  if (!ok) throw std::invalid_argument("bad rational literal: " + s);
  mpq_class q(s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace pmv
