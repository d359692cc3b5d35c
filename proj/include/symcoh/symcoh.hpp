#pragma once

#include "symcoh/rational.hpp"
#include "symcoh/linalg.hpp"
#include "symcoh/space.hpp"
#include "symcoh/ring.hpp"
#include "symcoh/oracle.hpp"
#include "symcoh/product.hpp"
#include "symcoh/geo_maps.hpp"
#include "symcoh/constants.hpp"
#include "symcoh/char_classes.hpp"
#include "symcoh/cycle_aj.hpp"
#include "symcoh/degeneration.hpp"
#include "symcoh/format.hpp"
#include "symcoh/expr.hpp"
#include "symcoh/random.hpp"
#include "symcoh/verify.hpp"
