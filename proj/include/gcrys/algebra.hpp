#pragma once

#include "gcrys/algebra/matrix.hpp"
#include "gcrys/algebra/monomial.hpp"
#include "gcrys/algebra/mpoly.hpp"
#include "gcrys/algebra/ratexpr.hpp"
#include "gcrys/algebra/variable.hpp"
