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


import os

from unittest import TestCase
from unittest.mock import patch

from lib.core.exceptions import InvalidParameter
from lib.core.settings import THREADS_ENV
from lib.utils.common import broadcast, parse_int_list, thread_cap


class TestCommonUtils(TestCase):
    def test_parse_int_list(self):
        self.assertEqual(parse_int_list("2, 3,4"), [2, 3, 4])
        self.assertEqual(parse_int_list("5"), [5])
        with self.assertRaises(InvalidParameter):
            parse_int_list("2,x")

    def test_broadcast(self):
        self.assertEqual(broadcast([2], 3, "M"), [2, 2, 2])
        self.assertEqual(broadcast([1, 2, 3], 3, "M"), [1, 2, 3])
        with self.assertRaises(InvalidParameter):
            broadcast([1, 2], 3, "M")

    def test_thread_cap(self):
        with patch.dict(os.environ, {THREADS_ENV: "2"}):
            self.assertEqual(thread_cap(8), 2, "IA_THREADS does not cap the worker count")
            self.assertEqual(thread_cap(1), 1)
        with patch.dict(os.environ, {THREADS_ENV: ""}):
            self.assertEqual(thread_cap(8), 8)
