#pragma once

#include "lefschetz/error.hpp"
#include "lefschetz/exactla.hpp"
#include "lefschetz/family.hpp"
#include "lefschetz/parse.hpp"
#include "lefschetz/polyring.hpp"
#include "lefschetz/quotient.hpp"
#include "lefschetz/semigroup.hpp"
#include "lefschetz/sweep.hpp"
