#ifndef ASMKIT_ASMKIT_HPP
#define ASMKIT_ASMKIT_HPP

#include "asmkit/errors.hpp"
#include "asmkit/rational.hpp"
#include "asmkit/cyclo12.hpp"
#include "asmkit/field.hpp"
#include "asmkit/laurent_poly.hpp"
#include "asmkit/uni_laurent.hpp"
#include "asmkit/linalg.hpp"
#include "asmkit/asm.hpp"
#include "asmkit/six_vertex.hpp"
#include "asmkit/pfaffian_formulas.hpp"
#include "asmkit/characters.hpp"
#include "asmkit/product_formulas.hpp"
#include "asmkit/identity_suite.hpp"

#endif
