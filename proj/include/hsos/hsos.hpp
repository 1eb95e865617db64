#pragma once

#include "gaussian_rational.hpp"
#include "monomial.hpp"
#include "holo_map.hpp"
#include "hermitian_form.hpp"
#include "scaled_map.hpp"
#include "rank.hpp"
#include "isometry.hpp"
#include "bounds.hpp"
