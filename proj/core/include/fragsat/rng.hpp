#pragma once

#include <cstdint>
#include <initializer_list>

// Deterministic PRNG with pinned bit-streams. <random>'s distributions are
// implementation-defined, which would silently break byte-reproducible corpora
// across stdlibs; everything here is fixed by this file alone.

namespace fragsat {

// splitmix64 step (public-domain constants; Steele/Lea/Flood).
inline uint64_t splitmix64(uint64_t &state) {
	uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

// Collapse a tuple of seed words into one; used for the documented
// per-instance seed derivation mix(master, fragment, s, index, attempt).
inline uint64_t mix_seed(std::initializer_list<uint64_t> words) {
	uint64_t state = 0x8f1bbcdcbfa53e0bULL;
	for (uint64_t w : words) {
		state ^= w;
		splitmix64(state);
	}
	uint64_t out = state;
	return splitmix64(out);
}

// xoshiro256** (Blackman/Vigna), seeded via splitmix64.
class Rng {
public:
	explicit Rng(uint64_t seed) {
		for (auto &word : s_)
			word = splitmix64(seed);
	}

	uint64_t next() {
		uint64_t result = rotl(s_[1] * 5, 7) * 9;
		uint64_t t = s_[1] << 17;
		s_[2] ^= s_[0];
		s_[3] ^= s_[1];
		s_[1] ^= s_[2];
		s_[0] ^= s_[3];
		s_[2] ^= t;
		s_[3] = rotl(s_[3], 45);
		return result;
	}

	// Uniform in [0, bound); Lemire's unbiased multiply-shift rejection.
	uint64_t below(uint64_t bound) {
		unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
		auto low = static_cast<uint64_t>(m);
		if (low < bound) {
			uint64_t threshold = (0 - bound) % bound;
			while (low < threshold) {
				m = static_cast<unsigned __int128>(next()) * bound;
				low = static_cast<uint64_t>(m);
			}
		}
		return static_cast<uint64_t>(m >> 64);
	}

	int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

	// Uniform double in [0,1) with 53 random bits.
	double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

	bool bernoulli(double p) { return unit() < p; }

private:
	static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
	uint64_t s_[4];
};

} // namespace fragsat
