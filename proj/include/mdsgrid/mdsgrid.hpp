#pragma once

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/exact/prime_field.hpp"
#include "mdsgrid/gk/criterion.hpp"
#include "mdsgrid/gk/gk_matrix.hpp"
#include "mdsgrid/gk/polynomial.hpp"
#include "mdsgrid/gk/search.hpp"
#include "mdsgrid/lattice/affine_map.hpp"
#include "mdsgrid/lattice/gk_normalize.hpp"
#include "mdsgrid/lattice/point.hpp"
#include "mdsgrid/lattice/support.hpp"
#include "mdsgrid/lattice/triangle.hpp"
#include "mdsgrid/linalg/deriv_matrix.hpp"
#include "mdsgrid/linalg/dixon.hpp"
#include "mdsgrid/linalg/fraction_free.hpp"
#include "mdsgrid/linalg/int_matrix.hpp"
#include "mdsgrid/linalg/interpolation.hpp"
#include "mdsgrid/linalg/mod_elimination.hpp"
#include "mdsgrid/util/parallel.hpp"
#include "mdsgrid/wpp/classify.hpp"
