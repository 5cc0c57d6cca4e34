from flask import Flask, jsonify
from flask_cors import CORS

from config.engine_config import AppConfig, EngineConfig
from config.env_loader import get_env_var, load_environment_variables
from performance_monitor import configure_logging, get_performance_metrics


def create_app(config_object=AppConfig):
    """Flask 앱 생성"""
    load_environment_variables()
    configure_logging(get_env_var('LOG_LEVEL', 'INFO'))

    app = Flask(__name__)
    app.config.from_object(config_object)
    CORS(app, resources={r"/api/*": {"origins": "*"}})

    from api.transversal_api import transversal_api
    app.register_blueprint(transversal_api, url_prefix='/api')

    @app.route('/')
    def root():
        return jsonify({
            'message': 'Latin Square Transversal API',
            'status': 'running',
            'version': '1.0.0'
        })

    @app.route('/health')
    def health_check():
        return jsonify({
            'status': 'healthy',
            'max_order': EngineConfig.MAX_ORDER,
            'workers': EngineConfig.resolve_workers(),
            'metrics': get_performance_metrics(),
        })

    return app


app = create_app()

if __name__ == '__main__':
    app.run(host='0.0.0.0', port=int(get_env_var('PORT', '5000')), debug=AppConfig.DEBUG)
