#pragma once

// Umbrella header.

#include "digamma/bigreal.hpp"
#include "digamma/closed_form.hpp"
#include "digamma/const_expr.hpp"
#include "digamma/cosine_combination.hpp"
#include "digamma/exact_core.hpp"
#include "digamma/formulas.hpp"
#include "digamma/numerics.hpp"
#include "digamma/rational.hpp"
#include "digamma/verification.hpp"
