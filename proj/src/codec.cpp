#include "algstat/codec.hpp"

#include <algorithm>
#include <cmath>

#include "algstat/error.hpp"

namespace algstat {

FiniteSetModel FiniteSetModel::canonicalize(std::span<const BitString> words) {
  if (words.empty()) throw Error(ErrorKind::EmptySet, "a model must contain at least one string");
  FiniteSetModel s;
  s.elements_.assign(words.begin(), words.end());
  std::sort(s.elements_.begin(), s.elements_.end());
  s.elements_.erase(std::unique(s.elements_.begin(), s.elements_.end()), s.elements_.end());
  return s;
}

double FiniteSetModel::log_size() const {
  return std::log2(static_cast<double>(elements_.size()));
}

bool FiniteSetModel::contains(const BitString& w) const {
  return std::binary_search(elements_.begin(), elements_.end(), w);
}

std::strong_ordering FiniteSetModel::operator<=>(const FiniteSetModel& other) const {
  return std::lexicographical_compare_three_way(elements_.begin(), elements_.end(),
                                                other.elements_.begin(), other.elements_.end());
}

BitString encode_element(const BitString& w) {
  BitString out;
  out.reserve(2 * w.size() + 2);
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(w[i]);
    out.push_back(w[i]);
  }
  out.push_back(false);
  out.push_back(true);
  return out;
}

BitString encode_set(const FiniteSetModel& set) {
  BitString out;
  for (const auto& w : set.elements()) out.append(encode_element(w));
  out.push_back(true);
  out.push_back(false);
  return out;
}

DecodeResult try_decode_set(const BitString& bits) {
  std::vector<BitString> elements;
  BitString current;
  bool terminated = false;
  std::size_t i = 0;
  for (; i + 1 < bits.size(); i += 2) {
    const bool a = bits[i];
    const bool b = bits[i + 1];
    if (a == b) {
      current.push_back(a);
    } else if (!a) {  // 01 closes an element
      elements.push_back(std::move(current));
      current = BitString();
    } else {  // 10 closes the list, but only between elements
      if (!current.empty()) return {};
      terminated = true;
      i += 2;
      break;
    }
  }
  if (!terminated || i != bits.size()) return {};
  if (elements.empty()) return {};
  for (std::size_t k = 1; k < elements.size(); ++k) {
    if (!(elements[k - 1] < elements[k])) return {DecodeStatus::NonCanonical, std::nullopt};
  }
  return {DecodeStatus::Ok, FiniteSetModel::canonicalize(elements)};
}

FiniteSetModel decode_set(const BitString& bits) {
  auto r = try_decode_set(bits);
  switch (r.status) {
    case DecodeStatus::Ok: return *std::move(r.set);
    case DecodeStatus::NonCanonical:
      throw Error(ErrorKind::NonCanonical, "elements of " + bits.str() + " are unsorted or repeated");
    case DecodeStatus::MalformedEncoding: break;
  }
  throw Error(ErrorKind::MalformedEncoding, "'" + bits.str() + "' is not a set encoding");
}

}  // namespace algstat
