#pragma once

// regseq: deciding regularity of polynomial sequences on finitely
// presented modules, with cross-validation of the colon, Koszul, and
// Ext-depth criteria.

#include "regseq/errors.hpp"
#include "regseq/field.hpp"
#include "regseq/monomial.hpp"
#include "regseq/order.hpp"
#include "regseq/polynomial.hpp"
#include "regseq/ring.hpp"
#include "regseq/free_element.hpp"
#include "regseq/groebner.hpp"
#include "regseq/ideal.hpp"
#include "regseq/submodule.hpp"
#include "regseq/fpmodule.hpp"
#include "regseq/homology.hpp"
#include "regseq/koszul.hpp"
#include "regseq/depth_value.hpp"
#include "regseq/criteria.hpp"
#include "regseq/session.hpp"
#include "regseq/execute.hpp"
#include "regseq/version.hpp"
