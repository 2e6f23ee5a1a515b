#pragma once

#include "milnor/derivation.hpp"
#include "milnor/derlog.hpp"
#include "milnor/errors.hpp"
#include "milnor/ideal_ops.hpp"
#include "milnor/invariants.hpp"
#include "milnor/jet_oracle.hpp"
#include "milnor/json_io.hpp"
#include "milnor/mora.hpp"
#include "milnor/order.hpp"
#include "milnor/parse.hpp"
#include "milnor/poly.hpp"
#include "milnor/rational.hpp"
#include "milnor/ring.hpp"
#include "milnor/space.hpp"
#include "milnor/weights_infer.hpp"
