# Copyright 2026 The hitchin-toolkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.
import re

numpy_matrix = re.compile(r"\b(np|numpy)\.(matrix|mat)\(")
mutable_default_args = re.compile(r"^\s*def .+\((.+=\{\}|.+=\[\])")
print_call = re.compile(r"^\s*print\(")
bare_except = re.compile(r"^\s*except\s*:")


def no_numpy_matrix(logical_line):
    """Check that numpy.matrix is not used

    HT001: 2x2 fields are plain ndarrays stacked on the last two axes
    """
    if numpy_matrix.search(logical_line):
        yield (0, "HT001: use numpy.ndarray instead of numpy.matrix")


def no_mutable_default_args(logical_line):
    """Check that mutable object isn't used as default argument

    HT002: Method's default argument shouldn't be mutable
    """
    if mutable_default_args.match(logical_line):
        yield (0, "HT002: Method's default argument shouldn't be mutable!")


def no_print_in_library(logical_line, filename):
    """Check that library modules log instead of printing

    HT003: print( is only allowed in the cli package and in tests
    """
    if '/cli/' in filename or '/tests/' in filename:
        return
    if print_call.match(logical_line):
        yield (0, "HT003: use LOG instead of print() in library modules")


def no_bare_except(logical_line):
    """Check that exceptions are caught by type

    HT004: bare except clauses hide toolkit errors
    """
    if bare_except.match(logical_line):
        yield (0, "HT004: catch a specific exception, not a bare except")


def factory(register):
    register(no_numpy_matrix)
    register(no_mutable_default_args)
    register(no_print_in_library)
    register(no_bare_except)
