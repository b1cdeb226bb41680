#pragma once

#include "morsetree/complex.hpp"
#include "morsetree/curry.hpp"
#include "morsetree/dmf.hpp"
#include "morsetree/equiv.hpp"
#include "morsetree/error.hpp"
#include "morsetree/induce.hpp"
#include "morsetree/merge_tree.hpp"
#include "morsetree/oracle.hpp"
#include "morsetree/orders.hpp"
#include "morsetree/rational.hpp"
#include "morsetree/realize.hpp"
