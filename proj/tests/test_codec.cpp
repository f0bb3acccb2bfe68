#include "doctest.h"

#include <random>
#include <set>

#include "algstat/codec.hpp"
#include "algstat/error.hpp"
#include "helpers.hpp"

using namespace algstat;
using algstat::testing::bits;

namespace {

FiniteSetModel set_of(std::initializer_list<const char*> words) {
  std::vector<BitString> v;
  for (const char* w : words) v.push_back(bits(w));
  return canonicalize(v);
}

ErrorKind decode_error(const BitString& b) {
  try {
    decode_set(b);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("decode_set accepted " << b.str());
  return ErrorKind::Usage;
}

}  // namespace

TEST_CASE("encode_element") {
  CHECK(encode_element(bits("")) == bits("01"));
  CHECK(encode_element(bits("10")) == bits("110001"));
  CHECK(encode_element(bits("0")) == bits("0001"));
}

TEST_CASE("encode_set") {
  CHECK(encode_set(set_of({""})) == bits("0110"));
  CHECK(encode_set(set_of({"0", "1"})) == bits("0001110110"));
  CHECK(encode_set(set_of({"1", "0"})) == encode_set(set_of({"0", "1"})));
}

TEST_CASE("decode_set") {
  CHECK(decode_set(bits("0110")) == set_of({""}));
  CHECK(decode_error(bits("11")) == ErrorKind::MalformedEncoding);
  CHECK(decode_error(bits("1101000110")) == ErrorKind::NonCanonical);
  CHECK(decode_error(bits("0001000110")) == ErrorKind::NonCanonical);  // duplicate
  CHECK(decode_error(bits("")) == ErrorKind::MalformedEncoding);
  CHECK(decode_error(bits("10")) == ErrorKind::MalformedEncoding);      // empty set
  CHECK(decode_error(bits("011")) == ErrorKind::MalformedEncoding);     // odd length
  CHECK(decode_error(bits("01")) == ErrorKind::MalformedEncoding);      // no list terminator
  CHECK(decode_error(bits("011000")) == ErrorKind::MalformedEncoding);  // junk after terminator
  CHECK(decode_error(bits("001001")) == ErrorKind::MalformedEncoding);  // terminator mid-element
}

TEST_CASE("canonicalize") {
  CHECK(set_of({"1", "0", "1"}).elements() == std::vector{bits("0"), bits("1")});
  CHECK(set_of({"00", "1"}).elements() == std::vector{bits("1"), bits("00")});
  CHECK_THROWS_AS(canonicalize(std::vector<BitString>{}), Error);
  CHECK(set_of({"0", "1"}).log_size() == doctest::Approx(1.0));
  CHECK(set_of({"0", "1", "00"}).log_size() == doctest::Approx(1.584962500721156));
}

TEST_CASE("round trip and injectivity over all small sets") {
  // All sets of 1..3 distinct words of length <= 3.
  const auto words = algstat::testing::all_words(3);
  std::set<BitString> encodings;
  std::size_t count = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      for (std::size_t k = j; k < words.size(); ++k) {
        if (i < j && j == k) continue;  // same set as i == j < k
        const auto s = canonicalize(std::vector{words[i], words[j], words[k]});
        ++count;
        const auto e = encode_set(s);
        CHECK(decode_set(e) == s);
        encodings.insert(e);
      }
    }
  }
  CHECK(count == 15 + 105 + 455);
  CHECK(encodings.size() == count);
}

TEST_CASE("element codes are prefix-free") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const auto a = algstat::testing::random_word(rng, 8);
    const auto b = algstat::testing::random_word(rng, 8);
    if (a == b) continue;
    const auto ea = encode_element(a);
    const auto eb = encode_element(b);
    CHECK_FALSE(ea.is_prefix_of(eb));
    CHECK(ea.size() == 2 * a.size() + 2);
  }
}
