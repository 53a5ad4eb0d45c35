from click.testing import CliRunner
import json
import logging
from pathlib import Path
from pasch_geometry.cli import cli
from pasch_geometry.core.constructions import cyclic_geometry
from pasch_geometry.utils.serialization import serialize_geometry


def test_check_uses_log_context_and_json_file():
    """Test that a command logs its run banner to the configured JSON file."""
    runner = CliRunner()

    with runner.isolated_filesystem():
        Path('z3.pg').write_text(serialize_geometry(cyclic_geometry(3)), encoding='utf-8')
        Path('settings.yaml').write_text(
            "logging:\n"
            "  level: INFO\n"
            "  file: logs/pasch_geometry.json\n"
            "  output_format: json\n",
            encoding='utf-8'
        )

        result = runner.invoke(cli, ['--config', 'settings.yaml', 'check', 'z3.pg'])

        assert result.exit_code == 0

        logger = logging.getLogger('pasch_geometry')
        for handler in logger.handlers:
            handler.close()
        logger.handlers = []

        log_file = Path('logs/pasch_geometry.json')
        assert log_file.exists()
        entries = [json.loads(line) for line in log_file.read_text(encoding='utf-8').splitlines()]
        messages = [entry['message'] for entry in entries]
        assert any(m.startswith('Start-time:') for m in messages)
        assert any('Config: settings.yaml' in m for m in messages)
        assert any('Command completed' in m for m in messages)
        banner = [entry for entry in entries if entry['message'].startswith('Start-time:')]
        assert banner[0]['command'].endswith('check')
