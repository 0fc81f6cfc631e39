#ifndef LPMCHOL_LPMCHOL_HPP
#define LPMCHOL_LPMCHOL_HPP

#include "lpmchol/algebra.hpp"
#include "lpmchol/biggroup.hpp"
#include "lpmchol/cholesky.hpp"
#include "lpmchol/core.hpp"
#include "lpmchol/error.hpp"
#include "lpmchol/geometry.hpp"
#include "lpmchol/inequality.hpp"
#include "lpmchol/matrix_types.hpp"
#include "lpmchol/random.hpp"
#include "lpmchol/sign_pattern.hpp"
#include "lpmchol/ssrpm.hpp"

#endif  // LPMCHOL_LPMCHOL_HPP
