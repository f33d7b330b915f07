#ifndef BRAIDCALC_BRAIDCALC_HPP
#define BRAIDCALC_BRAIDCALC_HPP

#include "braidcalc/alexander.hpp"
#include "braidcalc/braid_word.hpp"
#include "braidcalc/garside.hpp"
#include "braidcalc/invariants.hpp"
#include "braidcalc/rewrite.hpp"
#include "braidcalc/smoothing.hpp"

#endif  // BRAIDCALC_BRAIDCALC_HPP
