# Copyright 2026 The hitchin-toolkit Authors.
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

manifest = {
    "type": "object",
    "properties": {
        "command": {"type": "string"},
        "parameters": {"type": "object"},
        "tool_version": {"type": "string"},
        "outputs": {
            "type": "array",
            "items": {"type": "string"},
        },
    },
    "required": ["command", "parameters", "tool_version", "outputs"],
}

report = {
    "type": "object",
    "properties": {
        "manifest": manifest,
        "results": {"type": "object"},
        "warnings": {
            "type": "array",
            "items": {"type": "string"},
        },
    },
    "required": ["manifest", "results", "warnings"],
}
