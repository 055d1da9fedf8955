#pragma once

#include "schubert/integer.hpp"
#include "schubert/exterior_core.hpp"
#include "schubert/derivations.hpp"
#include "schubert/grassmann_context.hpp"
#include "schubert/giambelli_ring.hpp"
#include "schubert/grassmann_contexts.hpp"
#include "schubert/schur_oracle.hpp"
#include "schubert/pluecker.hpp"
#include "schubert/checks.hpp"
