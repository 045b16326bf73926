#pragma once

#include "qcpc/decoder.hpp"
#include "qcpc/enumerate.hpp"
#include "qcpc/error.hpp"
#include "qcpc/field.hpp"
#include "qcpc/galois.hpp"
#include "qcpc/linalg.hpp"
#include "qcpc/oracle.hpp"
#include "qcpc/poly_matrix.hpp"
#include "qcpc/polynomial.hpp"
#include "qcpc/product.hpp"
#include "qcpc/qcc.hpp"
#include "qcpc/spectral.hpp"
