from typing import List, Dict


def list_classes() -> Dict[str, List[str]]:
    return {
        "grothmodt.reader.Reader": [
            "grothmodt.reader",
        ],
        "grothmodt.writer.Writer": [
            "grothmodt.writer",
        ],
        "grothmodt.commands.Command": [
            "grothmodt.commands",
        ],
    }
