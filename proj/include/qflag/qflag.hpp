#ifndef QFLAG_QFLAG_HPP
#define QFLAG_QFLAG_HPP

#include "qflag/rational.hpp"
#include "qflag/polynomial.hpp"
#include "qflag/root_system.hpp"
#include "qflag/groebner.hpp"
#include "qflag/linear_algebra.hpp"
#include "qflag/borel.hpp"
#include "qflag/report.hpp"
#include "qflag/chevalley.hpp"
#include "qflag/flag_presentation.hpp"
#include "qflag/heisenberg.hpp"
#include "qflag/suites.hpp"

#endif  // QFLAG_QFLAG_HPP
