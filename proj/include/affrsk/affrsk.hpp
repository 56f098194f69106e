#pragma once

#include "affrsk/crystal.hpp"
#include "affrsk/error.hpp"
#include "affrsk/io.hpp"
#include "affrsk/matrix.hpp"
#include "affrsk/numbering.hpp"
#include "affrsk/render.hpp"
#include "affrsk/rsk.hpp"
#include "affrsk/tableau.hpp"
#include "affrsk/verify.hpp"
#include "affrsk/weight.hpp"
