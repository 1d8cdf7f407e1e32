#pragma once

// Convenience umbrella; each header is also usable on its own.

#include "dissect/arrangement.hpp"
#include "dissect/builders.hpp"
#include "dissect/closedforms.hpp"
#include "dissect/errors.hpp"
#include "dissect/fourier_motzkin.hpp"
#include "dissect/matrix.hpp"
#include "dissect/oracle.hpp"
#include "dissect/polynomial.hpp"
#include "dissect/poset.hpp"
#include "dissect/rational.hpp"
#include "dissect/toric.hpp"
