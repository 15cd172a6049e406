#pragma once

#include "mvstate/algebra.hpp"
#include "mvstate/gamma_xi.hpp"
#include "mvstate/geometry.hpp"
#include "mvstate/homomorphism.hpp"
#include "mvstate/parse.hpp"
#include "mvstate/state.hpp"
#include "mvstate/term.hpp"
#include "mvstate/universal.hpp"
