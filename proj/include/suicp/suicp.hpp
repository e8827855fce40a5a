#pragma once

#include "suicp/air.hpp"
#include "suicp/codec.hpp"
#include "suicp/fields.hpp"
#include "suicp/linalg.hpp"
#include "suicp/problem.hpp"
#include "suicp/reference.hpp"
#include "suicp/serialization.hpp"
#include "suicp/simulation.hpp"
