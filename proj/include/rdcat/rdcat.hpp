#pragma once

#include "rdcat/category.hpp"
#include "rdcat/checker.hpp"
#include "rdcat/combinators.hpp"
#include "rdcat/error.hpp"
#include "rdcat/fibration.hpp"
#include "rdcat/mat_category.hpp"
#include "rdcat/poly_category.hpp"
#include "rdcat/polynomial.hpp"
#include "rdcat/rig.hpp"
#include "rdcat/smooth_category.hpp"
