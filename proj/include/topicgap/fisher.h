// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef TOPICGAP_FISHER_H_
#define TOPICGAP_FISHER_H_

#include <cstdint>

namespace topicgap {

// Two-sided Fisher exact test on the 2x2 table
//
//   | a  b |
//   | c  d |
//
// p is the total hypergeometric probability (fixed margins) of all tables
// no more likely than the observed one, with a relative slack of 1e-7 on
// the comparison. An all-zero table gives 1. The result is invariant, bit
// for bit, under row swaps, column swaps and transposition.
double FisherExactTwoSided(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                           std::uint64_t d);

}  // namespace topicgap

#endif  // TOPICGAP_FISHER_H_
