#pragma once

// Decides whether a square complex matrix is unitarily equivalent to a
// complex symmetric matrix and, on success, constructs a verifiable
// certificate of the equivalence.

#include "uecsm/certificate.hpp"
#include "uecsm/complex_matrix.hpp"
#include "uecsm/hermitian_eig.hpp"
#include "uecsm/matrix_io.hpp"
#include "uecsm/modulus_test.hpp"
#include "uecsm/translation.hpp"
#include "uecsm/volterra.hpp"
