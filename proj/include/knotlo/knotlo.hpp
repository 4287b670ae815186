#pragma once

#include "alexander.hpp"
#include "certify.hpp"
#include "cfrac.hpp"
#include "error.hpp"
#include "groups.hpp"
#include "hecke.hpp"
#include "laurent.hpp"
#include "lifted_action.hpp"
#include "magnus.hpp"
#include "number_field.hpp"
#include "orders.hpp"
#include "word.hpp"
