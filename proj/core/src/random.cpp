#include "fidest/quantum/random.hpp"

#include <bit>

namespace fidest {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = splitmix64(sm);
}

RandomSource::result_type RandomSource::operator()() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double RandomSource::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double RandomSource::normal() { return normal_(*this); }

RandomSource RandomSource::split(std::uint64_t stream) const {
  std::uint64_t mix = seed_ ^ 0x6a09e667f3bcc909ULL;
  const std::uint64_t a = splitmix64(mix);
  std::uint64_t key = a ^ (stream * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL);
  return RandomSource(splitmix64(key));
}

}  // namespace fidest
