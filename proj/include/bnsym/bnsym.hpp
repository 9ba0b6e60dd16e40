#pragma once

#include "bnsym/error.hpp"
#include "bnsym/signed_perm.hpp"
#include "bnsym/poly.hpp"
#include "bnsym/descent_basis.hpp"
#include "bnsym/straighten.hpp"
#include "bnsym/hilbert.hpp"
