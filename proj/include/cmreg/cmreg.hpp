#pragma once

#include "arith.hpp"
#include "betti.hpp"
#include "bounds.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "gin.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "monomial.hpp"
#include "monomial_ideal.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "regularity.hpp"
#include "ring.hpp"
#include "univariate.hpp"
