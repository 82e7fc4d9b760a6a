# -*- coding: utf-8 -*-
#  This program is free software; you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation; either version 2 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program; if not, write to the Free Software
#  Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston,
#  MA 02110-1301, USA.


class AlignmentError(Exception):
    pass


class InvalidSpec(AlignmentError):
    pass


class InvalidParameter(AlignmentError):
    pass


class InvalidChannelFile(AlignmentError):
    pass


class ShapeMismatch(AlignmentError):
    pass


class RankDeficient(AlignmentError):
    pass


class ConvergenceFailure(AlignmentError):
    pass


class TooManyUsers(AlignmentError):
    pass


class HypothesisViolated(AlignmentError):
    pass


class BadK(AlignmentError):
    pass


class AsymmetricSpec(AlignmentError):
    pass


class SingularChannel(AlignmentError):
    pass


class DefectiveB(AlignmentError):
    pass


class InfeasibleInput(AlignmentError):
    pass


class DegenerateKernel(AlignmentError):
    pass


class DimensionMismatch(AlignmentError):
    pass


class ResourceLimit(AlignmentError):
    pass


class WitnessFailed(AlignmentError):
    pass


class NoConvergence(AlignmentError):
    pass


class PivotSingular(AlignmentError):
    pass


class MissingDirectChannels(AlignmentError):
    pass


class FileExistsException(Exception):
    pass
